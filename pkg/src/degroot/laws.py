"""Named law checks over a finite census and the symbolic catalog."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .classification import (
    classify_topology,
    verify_cor_3_7,
    verify_monoid_table,
    verify_prop_3_2,
    verify_prop_3_5,
)
from .census import topologies
from .dualization import (
    check_cor_2_5,
    check_cor_2_6,
    check_lemma_2_1,
    check_lemma_2_3,
    check_lemma_3_3,
    check_lemma_3_4,
    check_theorem_2_4,
)
from .errors import DegrootError, GuardExceeded
from .finite import FIP_GUARD, FiniteTopology
from .symbolic import SymbolicTopology, catalog, symbolic_dual_sequence

# the witness search grows with the number of subfamilies of the second-dual base
WITNESS_MAX_N = 4


@dataclass
class LawResult:
    name: str
    finite: int = 0
    symbolic: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<10} finite={self.finite} symbolic={self.symbolic}"
        if self.skipped:
            text += f" skipped={self.skipped}"
        if self.failures:
            text += f" first_failure={self.failures[0]}"
        return text

    def to_json(self) -> dict:
        return {
            "law": self.name,
            "passed": self.passed,
            "finite_instances": self.finite,
            "symbolic_instances": self.symbolic,
            "skipped": self.skipped,
            "failures": self.failures[:5],
        }


def _symbolic_prop(check) -> Callable[[SymbolicTopology], bool]:
    return lambda S: check(symbolic_dual_sequence(S)[1])


def _lemma_2_1(T: FiniteTopology) -> Optional[bool]:
    if len(T.opens) > FIP_GUARD:
        return None
    return check_lemma_2_1(T)


def _lemma_2_3(T: FiniteTopology) -> Optional[bool]:
    if T.n > WITNESS_MAX_N:
        return None
    check_lemma_2_3(T)
    return True


def _stabilizes(S: SymbolicTopology) -> bool:
    symbolic_dual_sequence(S)
    return True


# name -> (finite check, symbolic check or None); a finite check may return None to skip
LAWS: dict[str, tuple[Callable, Optional[Callable]]] = {
    "saturated-preserved": (check_theorem_2_4, None),
    "compact-stable": (check_cor_2_5, None),
    "d2-equals-d4": (check_cor_2_6, _stabilizes),
    "meet-compact": (_lemma_2_1, None),
    "point-witness": (_lemma_2_3, None),
    "self-dual-symmetric": (check_lemma_3_3, None),
    "closed-meet": (check_lemma_3_4, None),
    "g1-g3-equivalences": (lambda T: verify_prop_3_2(classify_topology(T)), _symbolic_prop(verify_prop_3_2)),
    "g2b-iff-g3c": (lambda T: verify_prop_3_5(classify_topology(T)), _symbolic_prop(verify_prop_3_5)),
    "dual-in-g3": (verify_cor_3_7, verify_cor_3_7),
    "monoid-table": (verify_monoid_table, None),
}


def run_laws(n: int, spaces: Optional[list[FiniteTopology]] = None) -> list[LawResult]:
    """Check every law on each topology with ``n`` points and every catalog member."""
    spaces = list(topologies(n)) if spaces is None else spaces
    members = catalog()
    results = []
    for name, (finite_check, symbolic_check) in LAWS.items():
        res = LawResult(name)
        for T in spaces:
            try:
                ok = finite_check(T)
            except GuardExceeded:
                ok = None
            except DegrootError as exc:
                res.failures.append(f"{T.to_json()}: {exc}")
                continue
            if ok is None:
                res.skipped += 1
            elif ok:
                res.finite += 1
            else:
                res.failures.append(str(T.to_json()))
        if symbolic_check is not None:
            for S in members:
                try:
                    ok = symbolic_check(S)
                except DegrootError as exc:
                    res.failures.append(f"{S}: {exc}")
                    continue
                if ok:
                    res.symbolic += 1
                else:
                    res.failures.append(str(S))
        results.append(res)
    return results
