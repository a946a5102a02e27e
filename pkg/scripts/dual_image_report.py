"""Which finite topologies arise as duals, tallied by generative level."""

import argparse
import json

from degroot.classification import dual_image_report

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=4)
args = ap.parse_args()
for n in range(args.max_n + 1):
    print(json.dumps(dual_image_report(n).to_json()))
