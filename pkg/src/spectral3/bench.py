"""Error sweeps over the critical-case benchmark matrices, emitted as CSV rows."""

import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from .eig3 import AngleMethod, NonRealSpectrum, eigenvalues
from .invariants import (
    Route,
    delta_pq_naive,
    deltap_sop,
    deltaq_subdisc,
    discriminant_naive,
    discriminant_sop,
    principal_invariants,
)
from .mat3 import trace
from .oracle import CriticalCase, TransformCase, make_test_matrix, merged_reference
from .projectors import DegenerateGradient, l1_error, projectors_dual

log = logging.getLogger(__name__)

HEADER = ("case", "transform", "gamma", "method", "delta", "quantity", "computed", "reference", "abs_error")
QUANTITIES = ("Delta", "Delta_p", "Delta_q", "I1", "lambda_1", "lambda_2", "lambda_3", "E_l1")

# each benchmark method pairs an invariant route with its angle formula
METHODS = {
    "sop": (Route.SOP, AngleMethod.ARCTAN),
    "naive": (Route.NAIVE, AngleMethod.ARCCOS),
}


@dataclass(frozen=True)
class BenchRecord:
    case: str
    transform: str
    gamma: Optional[float]
    method: str
    delta: float
    quantity: str
    computed: float
    reference: float
    abs_error: float

    def sort_key(self):
        return (self.case, self.transform, self.method, self.delta, self.quantity)

    def row(self):
        return (
            self.case,
            self.transform,
            "" if self.gamma is None else fmt(self.gamma),
            self.method,
            fmt(self.delta),
            self.quantity,
            fmt(self.computed),
            fmt(self.reference),
            fmt(self.abs_error),
        )


def fmt(x: float) -> str:
    """Shortest round-trip decimal form."""
    return repr(float(x))


def _abs_err(computed: float, reference: float) -> float:
    """|computed - reference| of the emitted binary64 values, rounded once."""
    return float(abs(Fraction(computed) - Fraction(reference)))


def invariants_for(b, route: Route):
    """Unclamped (delta, delta_p, delta_q) as the given route evaluates them."""
    if route is Route.NAIVE:
        inv = principal_invariants(b)
        dp, dq = delta_pq_naive(inv)
        return discriminant_naive(inv), dp, dq
    return discriminant_sop(b), deltap_sop(b), deltaq_subdisc(b)


def run_point(case, transform: TransformCase, method: str, delta: float) -> List[BenchRecord]:
    case = CriticalCase(case)
    route, angle_method = METHODS[method]
    b, truth = make_test_matrix(case, transform, delta)

    def rec(quantity, computed, reference):
        computed, reference = float(computed), float(reference)
        return BenchRecord(
            case.value, transform.name, transform.gamma, method, float(delta), quantity,
            computed, reference, _abs_err(computed, reference),
        )

    d, dp, dq = invariants_for(b, route)
    out = [
        rec("Delta", d, truth.delta),
        rec("Delta_p", dp, truth.delta_p),
        rec("Delta_q", dq, truth.delta_q),
        rec("I1", trace(b), truth.i1),
    ]
    if truth.eigenvalues is None:
        log.warning("%s/%s/%s delta=%g: rounded matrix has a complex pair; eigen rows skipped",
                    case.value, transform.name, method, delta)
        return out
    try:
        triple = eigenvalues(b, route, angle_method)
    except NonRealSpectrum as exc:
        log.warning("%s/%s/%s delta=%g: %s; eigen rows skipped", case.value, transform.name, method, delta, exc)
        return out
    for k, (lam, ref) in enumerate(zip(triple.values, truth.eigenvalues), start=1):
        out.append(rec(f"lambda_{k}", lam, ref))
    try:
        proj = projectors_dual(b, route, angle_method, triple)
        refs = merged_reference(truth, triple.multiplicity)
        # the l1 distance is itself the error, measured against a reference of 0
        out.append(rec("E_l1", l1_error(proj, refs), 0.0))
    except (DegenerateGradient, ArithmeticError) as exc:
        log.warning("%s/%s/%s delta=%g: projectors skipped (%s)", case.value, transform.name, method, delta, exc)
    return out


def run_sweep(case, transform: TransformCase, methods: Iterable[str], grid: Iterable[float]) -> List[BenchRecord]:
    records = []
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}")
        for delta in grid:
            records.extend(run_point(case, transform, method, delta))
    records.sort(key=BenchRecord.sort_key)
    return records


def write_csv(records: Iterable[BenchRecord], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(HEADER)
    for r in records:
        writer.writerow(r.row())
