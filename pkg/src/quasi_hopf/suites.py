"""
Verification suites and derived-element dumps over a parsed instance.

A suite expands into independent checker tasks. ``run_suite`` runs them on a thread pool
and reassembles the reports in declaration order, so the output does not depend on the
worker count or on completion order.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .algebra import QuasiHopfAlgebra
from .axioms import check_quasi_bialgebra, check_quasi_hopf
from .braided import BraidedHopfAlgebra, braided_from_structure, check_braided_hopf, dual_braided_hopf
from .derived import check_lemma_identities, derive_pq, derive_twist, derive_U
from .exceptions import PreconditionError, QhaError
from .h_zero import build_h0, build_h0_hopf, check_h0, h0_consistency, h0_dual_and_integrals
from .hopf_modules import (
    check_b_star,
    check_hopf_module,
    hm_projection,
    integrals,
    regular_hopf_module,
    structure_iso,
    trivial_hopf_module,
)
from .instances import Instance, unit_yd
from .quasitriangular import QTStructure, check_ext, check_qt, check_qybe, derive_u
from .report import VerificationReport
from .tensor import Tensor
from .utils import DEFAULT_MAX_WORKERS, format_scalar
from .yetter_drinfeld import (
    YDModule,
    check_dual_yd,
    check_quasi_yang_baxter,
    check_yd,
    check_yd_braiding,
    check_yd_hexagons,
)

logger = logging.getLogger(__name__)

SUITES = ("qbi", "qhopf", "qt", "yd", "h0", "braided", "hopf-mod", "integrals")
ALL = "all"
DERIVABLES = ("f", "gamma-delta", "pq", "u", "U", "h0", "h0-dual", "integrals")

Derived = dict[str, str]
Outcome = tuple[VerificationReport, Derived]
Task = tuple[str, Callable[[], Outcome]]


@dataclass
class SuiteReport:
    """The merged report of a suite run plus any derived elements it printed."""

    suite: str
    report: VerificationReport
    derived: Derived = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict[str, Any]:
        out = self.report.to_dict()
        out["suite"] = self.suite
        out["derived"] = dict(self.derived)
        return out

    def to_text(self, notation: bool = False) -> str:
        lines = [f"suite {self.suite}", self.report.to_text(notation)]
        lines.extend(f"{name} = {text}" for name, text in self.derived.items())
        return "\n".join(lines)


# -- formatting ----------------------------------------------------------------------------------


def basis_names(A: QuasiHopfAlgebra) -> list[str]:
    """``"1"`` for the basis vector that is the unit, ``e<i>`` for the others."""
    names = [f"e{i}" for i in range(A.dim)]
    nonzero = [i for i, x in enumerate(A.unit) if x != 0]
    if len(nonzero) == 1 and A.unit[nonzero[0]] == 1:
        names[nonzero[0]] = "1"
    return names


def format_element(t: Tensor | np.ndarray, names: list[str], legs: tuple[str, ...] | None = None) -> str:
    """An exact linear combination such as ``1/2 1⊗1 + 1/2 1⊗e1 - 1/2 e1⊗e1``."""
    if isinstance(t, Tensor):
        data = (t.order(legs) if legs else t).data
    else:
        data = np.asarray(t, dtype=object)
    terms = []
    for index in np.ndindex(data.shape):
        value = data[index]
        if value == 0:
            continue
        basis = "⊗".join(names[i] for i in index) if index else "1"
        if value == 1:
            term = basis
        elif value == -1:
            term = f"-{basis}"
        else:
            term = f"{format_scalar(value)} {basis}" if index else format_scalar(value)
        terms.append(term)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def _dual_names(dim: int) -> list[str]:
    return [f"e{i}*" for i in range(dim)]


# -- preparation ---------------------------------------------------------------------------------


def normalize_alpha_beta(instance: Instance) -> Instance:
    """Rescale ``α``, ``β`` to ``ε(α) = ε(β) = 1`` throughout the bundle, when possible."""
    A = instance.algebra.with_alpha_beta_normalized()
    if A is instance.algebra:
        return instance
    qt = QTStructure(A, instance.qt.R, name=instance.qt.name) if instance.qt is not None else None
    modules = tuple(M.with_algebra(A, M.flavor) for M in instance.modules)
    braided = tuple(
        braided_from_structure(
            A,
            B.carrier.action,
            B.carrier.coaction,
            B.algebra.mult,
            B.algebra.unit,
            B.coalgebra.comult,
            B.coalgebra.counit,
            B.antipode,
            name=B.name,
        )
        for B in instance.braided
    )
    return replace(instance, algebra=A, qt=qt, modules=modules, braided=braided)


def braided_hopf_algebras(instance: Instance, validate: bool = False) -> list[BraidedHopfAlgebra]:
    """The bundle's braided Hopf algebras, followed by ``H₀`` when an R-matrix is present."""
    out = list(instance.braided)
    if instance.qt is not None:
        out.append(build_h0_hopf(instance.qt, validate=validate))
    return out


def _test_modules(instance: Instance) -> list[YDModule]:
    left = [M for M in instance.modules if M.flavor == "left"]
    return left or [unit_yd(instance.algebra)]


# -- suites --------------------------------------------------------------------------------------


def _only(report: VerificationReport) -> Outcome:
    return report, {}


def _require_qt(instance: Instance, what: str) -> QTStructure:
    if instance.qt is None:
        raise PreconditionError(f"{what} needs an r_matrix block in {instance.name or 'the instance'}")
    return instance.qt


def _qbi(instance: Instance) -> list[Task]:
    return [("qbi", lambda: _only(check_quasi_bialgebra(instance.algebra)))]


def _qhopf(instance: Instance) -> list[Task]:
    A = instance.algebra
    return [
        ("qhopf", lambda: _only(check_quasi_hopf(A))),
        ("twist", lambda: _only(derive_twist(A, validate=False).report)),
        ("pq", lambda: _only(derive_pq(A, validate=False).report)),
        ("lemma", lambda: _only(check_lemma_identities(A))),
    ]


def _qt(instance: Instance) -> list[Task]:
    QT = _require_qt(instance, "the qt suite")
    return [
        ("qt", lambda: _only(check_qt(QT))),
        ("u", lambda: _only(derive_u(QT, validate=False).report)),
        ("r-twist", lambda: _only(check_ext(QT))),
        ("r-yang-baxter", lambda: _only(check_qybe(QT))),
    ]


def _yd_tasks(M: YDModule) -> list[Task]:
    tasks: list[Task] = [(f"yd {M.name}", lambda: _only(check_yd(M)))]
    if M.flavor == "left":
        tasks.append((f"yd-braiding {M.name}", lambda: _only(check_yd_braiding(M, M))))
        tasks.append((f"yd-hexagon {M.name}", lambda: _only(check_yd_hexagons(M, M, M))))
    elif M.flavor == "left-right":
        tasks.append((f"yang-baxter {M.name}", lambda: _only(check_quasi_yang_baxter(M))))
    else:
        tasks.append((f"dual-yd {M.name}", lambda: _only(check_dual_yd(M))))
    return tasks


def _yd(instance: Instance) -> list[Task]:
    if not instance.modules:
        raise PreconditionError(f"the yd suite needs a modules block in {instance.name or 'the instance'}")
    return [task for M in instance.modules for task in _yd_tasks(M)]


def _h0(instance: Instance) -> list[Task]:
    tasks: list[Task] = [("h0", lambda: _only(check_h0(instance.algebra)))]
    if instance.qt is not None:
        QT = instance.qt
        tasks.append(("h0-hopf", lambda: _only(check_braided_hopf(build_h0_hopf(QT, validate=False)))))
        tasks.append(("h0-consistency", lambda: _only(h0_consistency(QT))))
    return tasks


def _need_braided(instance: Instance, what: str) -> list[BraidedHopfAlgebra]:
    algebras = braided_hopf_algebras(instance)
    if not algebras:
        raise PreconditionError(f"{what} needs a braided_hopf or r_matrix block in {instance.name or 'the instance'}")
    return algebras


def _braided(instance: Instance) -> list[Task]:
    tasks: list[Task] = []
    for B in _need_braided(instance, "the braided suite"):
        tasks.append((f"braided {B.name}", lambda B=B: _only(check_braided_hopf(B))))
        tasks.append((f"braided-dual {B.name}", lambda B=B: _only(check_braided_hopf(dual_braided_hopf(B, False)))))
    return tasks


def _regular_module_report(B: BraidedHopfAlgebra) -> VerificationReport:
    M = regular_hopf_module(B, validate=False)
    report = VerificationReport("hopf-mod").extend(check_hopf_module(M))
    report.extend(hm_projection(M, validate=False)[1])
    return report.extend(structure_iso(M, validate=False).report)


def _trivial_module_report(N: YDModule, B: BraidedHopfAlgebra) -> VerificationReport:
    M = trivial_hopf_module(N, B, validate=False)
    report = VerificationReport("hopf-mod").extend(check_hopf_module(M))
    return report.extend(structure_iso(M, validate=False).report)


def _hopf_mod(instance: Instance) -> list[Task]:
    tasks: list[Task] = []
    for B in _need_braided(instance, "the hopf-mod suite"):
        tasks.append((f"regular {B.name}", lambda B=B: _only(_regular_module_report(B))))
        for N in _test_modules(instance):
            tasks.append((f"trivial {N.name}⊗{B.name}", lambda N=N, B=B: _only(_trivial_module_report(N, B))))
        tasks.append((f"bstar {B.name}", lambda B=B: _only(check_b_star(B))))
    return tasks


def _integral_task(B: BraidedHopfAlgebra) -> Outcome:
    space = integrals(B, validate=False)
    names = _dual_names(B.dim)
    return space.report, {f"integrals[{B.name}]": "; ".join(format_element(v, names) for v in space.basis)}


def _integrals(instance: Instance) -> list[Task]:
    tasks: list[Task] = [
        (f"integrals {B.name}", lambda B=B: _integral_task(B))
        for B in _need_braided(instance, "the integrals suite")
    ]
    if instance.qt is not None:
        QT = instance.qt
        tasks.append(("h0-dual", lambda: _only(h0_dual_and_integrals(QT, validate=False).report)))
    return tasks


_PLANNERS: dict[str, Callable[[Instance], list[Task]]] = {
    "qbi": _qbi,
    "qhopf": _qhopf,
    "qt": _qt,
    "yd": _yd,
    "h0": _h0,
    "braided": _braided,
    "hopf-mod": _hopf_mod,
    "integrals": _integrals,
}


def plan_suite(instance: Instance, suite: str) -> list[Task]:
    """
    Expand ``suite`` into labelled tasks, in the order their reports are printed.

    ``all`` skips suites whose prerequisites the instance does not carry.

    Raises:
        ValueError: If ``suite`` is unknown
        PreconditionError: If a named suite needs a block the instance lacks
    """
    if suite == ALL:
        tasks: list[Task] = []
        for name in SUITES:
            try:
                tasks.extend(_PLANNERS[name](instance))
            except PreconditionError as e:
                logger.info(f"Skipping suite {name}: {e}")
        return tasks
    if suite not in _PLANNERS:
        raise ValueError(f"unknown suite '{suite}', expected one of {[*SUITES, ALL]}")
    return _PLANNERS[suite](instance)


def _guarded(label: str, compute: Callable[[], Outcome]) -> Outcome:
    try:
        return compute()
    except QhaError as e:
        logger.warning(f"Task {label} raised {type(e).__name__}: {e}")
        report = VerificationReport(label.split(" ")[0])
        report.record("computation", label, False, note=f"{type(e).__name__}: {e}")
        return report, {}


def run_suite(instance: Instance, suite: str = ALL, max_workers: int = DEFAULT_MAX_WORKERS) -> SuiteReport:
    """
    Run ``suite`` on ``instance``.

    Args:
        instance: A parsed bundle
        suite: One of :data:`SUITES` or ``"all"``
        max_workers: Threads for the independent checker tasks

    Returns:
        The merged report in declaration order, with any derived elements the suite prints
    """
    tasks = plan_suite(instance, suite)
    name = instance.name or "instance"
    logger.info(f"Running {len(tasks)} tasks of suite {suite} on {name} with {max_workers} workers")
    results: list[Outcome | None] = [None] * len(tasks)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {executor.submit(_guarded, label, compute): i for i, (label, compute) in enumerate(tasks)}
        for done, future in enumerate(as_completed(futures), 1):
            i = futures[future]
            results[i] = future.result()
            logger.debug(f"[{done}/{len(tasks)}] finished {tasks[i][0]}")

    report = VerificationReport(suite)
    derived: Derived = {}
    for result in results:
        assert result is not None
        report.extend(result[0])
        derived.update(result[1])
    logger.info(f"Suite {suite}: {report.summary()}")
    return SuiteReport(suite, report, derived)


# -- derive ----------------------------------------------------------------------------------------


def _pairs(A: QuasiHopfAlgebra, elements: dict[str, Tensor], legs: tuple[str, ...]) -> Derived:
    names = basis_names(A)
    return {key: format_element(t, names, legs) for key, t in elements.items()}


def _table(entries: np.ndarray, names: list[str], symbol: str) -> list[str]:
    """Rows ``e_i<symbol>e_j = ...`` of a bilinear operation ``entries[i, j, k]``."""
    d = entries.shape[0]
    rows = []
    for i in range(d):
        for j in range(d):
            rows.append(f"{names[i]}{symbol}{names[j]} = {format_element(entries[i, j], names)}")
    return rows


def derive(instance: Instance, what: str) -> Derived:
    """
    Compute and format the derived elements named by ``what``.

    Constructions run with their post-checks on, so an inconsistent bundle raises.

    Raises:
        ValueError: If ``what`` is unknown
        PreconditionError: If ``what`` needs an R-matrix the bundle lacks
        PostCheckError: If a prerequisite check fails
    """
    A = instance.algebra
    pair, single = ("1", "2"), ("1",)
    if what == "f":
        tw = derive_twist(A)
        return _pairs(A, {"f": tw.f, "f_inv": tw.f_inv}, pair)
    if what == "gamma-delta":
        tw = derive_twist(A)
        return _pairs(A, {"gamma": tw.gamma, "delta": tw.delta}, pair)
    if what == "pq":
        pq = derive_pq(A)
        return _pairs(A, {"p_R": pq.p_R, "q_R": pq.q_R, "p_L": pq.p_L, "q_L": pq.q_L}, pair)
    if what == "u":
        u = derive_u(_require_qt(instance, "u"))
        return _pairs(A, {"u": u.u, "u_inv": u.u_inv}, single)
    if what == "U":
        return _pairs(A, {"U": derive_U(A)}, pair)
    if what == "h0":
        names = basis_names(A)
        B = build_h0(A)
        out = {"unit": format_element(B.unit, names)}
        out.update({f"product[{k}]": row for k, row in enumerate(_table(B.mult, names, "∘"))})
        if instance.qt is not None:
            hopf = build_h0_hopf(instance.qt)
            for i in range(hopf.dim):
                out[f"comult({names[i]})"] = format_element(hopf.coalgebra.comult[i], names)
            for i in range(hopf.dim):
                out[f"antipode({names[i]})"] = format_element(hopf.antipode[i], names)
        return out
    if what == "h0-dual":
        result = h0_dual_and_integrals(_require_qt(instance, "h0-dual"))
        names = _dual_names(A.dim)
        out = {"unit": format_element(result.dual.algebra.unit, names)}
        out.update({f"product[{k}]": row for k, row in enumerate(_table(result.dual.algebra.mult, names, "*"))})
        out["integrals"] = "; ".join(format_element(v, names) for v in result.integrals)
        return out
    if what == "integrals":
        out = {}
        for B in _need_braided(instance, "integrals"):
            space = integrals(B)
            out[f"integrals[{B.name}]"] = "; ".join(format_element(v, _dual_names(B.dim)) for v in space.basis)
        return out
    raise ValueError(f"unknown derivation '{what}', expected one of {list(DERIVABLES)}")
