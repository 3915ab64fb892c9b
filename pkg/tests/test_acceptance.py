"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every criterion is exact (integer equalities over exhaustive or pinned
sweeps); the two runtime-bounded sweeps assert their wall-clock budgets.
"""

import time

import swlab.lattice as lattice
from swlab.lattice import (
    ExtAffineElement,
    Params,
    SerreWeightClass,
    Weight,
    WeylElement,
)
from swlab.verify import (
    SuiteConfig,
    check_d0_multiplicity_one,
    check_envelope_dimensions,
    check_filtration_lattice,
    check_graded_multiplicity_free,
    check_graph_injectivity,
    check_graph_symmetry,
    check_submodule_lattice,
    check_wq_cardinality,
)
from swlab.weights import TameParam, w_question
from swlab.d0 import d0_full

CFG = SuiteConfig()


def _report(n, label, outcomes):
    failed = [o for o in outcomes if not o.passed]
    status = "FAIL" if failed else "PASS"
    print(f"ACCEPTANCE {n} {label}: {status}")
    assert not failed, failed
    assert outcomes, "empty sweep"


def test_criterion_01_injectivity():
    t0 = time.time()
    outcomes = []
    for p in (5, 7):
        for f in (1, 2, 3):
            outcomes += check_graph_injectivity(Params(p, f), CFG)
    elapsed = time.time() - t0
    _report(1, "graph injectivity (radius 2, all 1-deep weights)", outcomes)
    assert elapsed < 60, f"injectivity sweep took {elapsed:.1f}s"


def test_criterion_02_hypercube_size():
    outcomes = []
    for p in (5, 7, 11):
        for f in (1, 2, 3):
            outcomes += check_wq_cardinality(Params(p, f), CFG)
    _report(2, "predicted weight sets have 2^f elements", outcomes)


def test_criterion_03_dimension_identity():
    outcomes = []
    for p in (5, 7):
        for f in (1, 2, 3):
            outcomes += check_envelope_dimensions(Params(p, f), CFG)
    _report(3, "total dim (2p)^f and factor dims per coordinate", outcomes)


def test_criterion_04_graded_multiplicity_free():
    outcomes = []
    for p in (5, 7):
        for f in (1, 2, 3):
            outcomes += check_graded_multiplicity_free(Params(p, f), CFG)
    _report(4, "graded pieces and successor windows multiplicity free", outcomes)


def test_criterion_05_submodule_lattice():
    outcomes = []
    for f in (1, 2, 3):
        outcomes += check_submodule_lattice(Params(5, f), CFG)
    _report(5, "submodule lattice respects reverse label inclusion", outcomes)


def test_criterion_06_filtration_lemmas():
    outcomes = []
    for f in (1, 2, 3):
        outcomes += check_filtration_lattice(Params(5, f), CFG)
    _report(6, "filtration intersection closure identity", outcomes)


def test_criterion_07_d0_multiplicity_one():
    t0 = time.time()
    outcomes = []
    for p in (5, 7, 11):
        for f in (1, 2, 3):
            outcomes += check_d0_multiplicity_one(Params(p, f), CFG)
    elapsed = time.time() - t0
    _report(7, "D0 multiplicity one across the generic sweep", outcomes)
    assert elapsed < 300, f"D0 sweep took {elapsed:.1f}s"


def test_criterion_08_f1_classical_cross_check():
    params = Params(7, 1)
    mu = Weight(((4, 0),))
    split = w_question(TameParam(WeylElement((False,)), mu, params))
    assert set(split) == {SerreWeightClass((3,), 0), SerreWeightClass((1,), 4)}
    nonsplit = w_question(TameParam(WeylElement((True,)), mu, params))
    assert set(nonsplit) == {SerreWeightClass((3,), 0), SerreWeightClass((3,), 3)}
    rep = d0_full(TameParam(WeylElement((True,)), mu, params))
    assert [len(b.constituents) for b in rep.blocks] == [2, 2]
    assert len(set(rep.all_constituents)) == 4
    print("ACCEPTANCE 8 f=1 classical weight pairs and D0 length: PASS")


def test_criterion_09_symmetry():
    outcomes = []
    for f in (1, 2):
        outcomes += check_graph_symmetry(Params(7, f), CFG)
    _report(9, "recentring symmetry over all hypercube pairs", outcomes)


def test_criterion_10_fault_sensitivity(monkeypatch):
    params = Params(7, 1)
    assert check_graph_injectivity(params, CFG)[0].passed

    original = lattice.p_dot

    def flipped(prm, g, w):
        return original(prm, ExtAffineElement(-g.translation, g.weyl), w)

    monkeypatch.setattr(lattice, "p_dot", flipped)
    outcome = check_graph_injectivity(params, CFG)[0]
    monkeypatch.undo()

    assert not outcome.passed
    assert outcome.counterexample
    print(
        "ACCEPTANCE 10 flipped p-dot translation fails criterion 1 "
        f"(counterexample: {outcome.counterexample}): PASS"
    )
