from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superposer.ir import CircuitBuilder, GateKind, gate_histogram
from superposer.simulator import run, uniform_distance
from superposer.synthesis import (
    BIT_ORDER,
    binary_decompose,
    factor,
    plan,
    rotation_params,
    synthesize,
)


def test_factor_examples():
    assert factor(12) == (2, 3)
    assert factor(7) == (0, 7)
    assert factor(16) == (4, 1)
    assert factor(1) == (0, 1)


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(-3)


@given(st.integers(min_value=1, max_value=10**9))
def test_factor_reconstructs(N):
    xi, M = factor(N)
    assert M % 2 == 1
    assert (M << xi) == N


def test_binary_decompose_examples():
    assert binary_decompose(7) == (3, (2, 1))
    assert binary_decompose(29) == (4, (4, 3, 2))
    assert binary_decompose(3) == (2, (1,))


def test_binary_decompose_rejects_bad_input():
    with pytest.raises(ValueError):
        binary_decompose(1)
    with pytest.raises(ValueError):
        binary_decompose(12)


@given(st.integers(min_value=1, max_value=1 << 20).map(lambda v: 2 * v + 1))
def test_binary_decompose_reconstructs(M):
    g, k = binary_decompose(M)
    assert g == bin(M).count("1")
    assert all(a > b for a, b in zip(k, k[1:]))
    assert k[-1] >= 1
    assert sum(1 << e for e in k) + 1 == M


def test_rotation_params_examples():
    assert rotation_params(3) == (Fraction(2, 3),)
    assert rotation_params(5) == (Fraction(4, 5),)
    assert rotation_params(7) == (Fraction(4, 7), Fraction(2, 3))
    assert rotation_params(15) == (Fraction(8, 15), Fraction(4, 7), Fraction(2, 3))


def test_rotation_params_renormalize_against_the_residual():
    # The second split must divide by what is left (7 - 4 = 3), not by
    # the full mass. Using the share-of-total 2/7 instead leaves the
    # state visibly non-uniform, so the two choices cannot be confused.
    wrong = (
        CircuitBuilder(3)
        .g(0, Fraction(4, 7))
        .cg(0, 1, Fraction(2, 7))
        .zero_ch(1, 2)
        .zero_ch(0, 1)
        .freeze()
    )
    assert uniform_distance(run(wrong), 7) > 0.05
    assert uniform_distance(run(synthesize(7)), 7) < 1e-12


@given(st.integers(min_value=3, max_value=(1 << 20) - 1).map(lambda v: v | 1))
def test_rotation_params_lie_in_upper_half(M):
    for p in rotation_params(M):
        assert Fraction(1, 2) < p < 1


def test_plan_examples():
    pl7 = plan(7)
    assert (pl7.n, pl7.xi, pl7.M, pl7.m, pl7.g) == (3, 0, 7, 3, 3)
    assert pl7.k == (2, 1)
    assert pl7.p == (Fraction(4, 7), Fraction(2, 3))

    pl16 = plan(16)
    assert (pl16.n, pl16.xi, pl16.M, pl16.m, pl16.g) == (4, 4, 1, 0, 1)
    assert pl16.k == () and pl16.p == ()

    pl30 = plan(30)
    assert (pl30.n, pl30.xi, pl30.M, pl30.m, pl30.g) == (5, 1, 15, 4, 4)
    assert pl30.p == (Fraction(8, 15), Fraction(4, 7), Fraction(2, 3))


def test_plan_width_splits_between_odd_part_and_hadamard_layer():
    for N in range(2, 2049):
        pl = plan(N)
        if pl.M > 1:
            assert pl.n == pl.xi + pl.m
        else:
            assert pl.n == pl.xi


def test_synthesize_n2_is_a_single_hadamard():
    circuit = synthesize(2)
    assert circuit.n_qubits == 1
    assert [(g.kind, g.target) for g in circuit] == [(GateKind.H, 0)]


def test_synthesize_n7_exact_gate_list():
    gates = synthesize(7).gates
    assert [g.kind for g in gates] == [
        GateKind.G,
        GateKind.CG,
        GateKind.ZERO_CH,
        GateKind.ZERO_CH,
    ]
    assert gates[0].target == 0 and gates[0].prob == Fraction(4, 7)
    assert (gates[1].control, gates[1].target, gates[1].prob) == (0, 1, Fraction(2, 3))
    assert (gates[2].control, gates[2].target) == (1, 2)
    assert (gates[3].control, gates[3].target) == (0, 1)


def test_synthesize_n12_puts_hadamards_on_trailing_qubits():
    gates = synthesize(12).gates
    assert [g.kind for g in gates] == [
        GateKind.G,
        GateKind.ZERO_CH,
        GateKind.H,
        GateKind.H,
    ]
    assert gates[0].prob == Fraction(2, 3)
    assert (gates[1].control, gates[1].target) == (0, 1)
    assert [g.target for g in gates[2:]] == [2, 3]


def test_synthesize_n1_is_empty():
    circuit = synthesize(1)
    assert circuit.n_qubits == 1
    assert circuit.gates == ()


def test_synthesize_rejects_nonpositive():
    with pytest.raises(ValueError):
        synthesize(0)


def test_synthesize_gate_structure():
    # One G, g-2 CG, m-1 ZERO_CH, xi H, whenever the odd part is nontrivial.
    for N in range(2, 513):
        pl = plan(N)
        hist = gate_histogram(synthesize(N))
        if pl.g == 1:
            assert hist == ({GateKind.H: pl.xi} if pl.xi else {})
        else:
            assert hist.get(GateKind.G, 0) == 1
            assert hist.get(GateKind.CG, 0) == pl.g - 2
            assert hist.get(GateKind.ZERO_CH, 0) == pl.m - 1
            assert hist.get(GateKind.H, 0) == pl.xi


def test_cg_gates_always_target_untouched_qubits():
    # This is what licenses the one-CNOT lowering of CG.
    for N in range(2, 1025):
        touched = set()
        for gate in synthesize(N):
            if gate.kind is GateKind.CG:
                assert gate.target not in touched
            touched.update(gate.qubits)


def test_probabilities_stay_exact():
    for gate in synthesize(29):
        if gate.prob is not None:
            assert isinstance(gate.prob, Fraction)


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=512))
def test_synthesized_state_is_uniform(N):
    assert uniform_distance(run(synthesize(N)), N) < 1e-12


def test_bit_order_round_trip():
    assert BIT_ORDER.index_of((1, 0, 1)) == 5
    assert BIT_ORDER.bits_of(5, 3) == (1, 0, 1)
    assert BIT_ORDER.msb_qubit == 0
    for idx in range(16):
        assert BIT_ORDER.index_of(BIT_ORDER.bits_of(idx, 4)) == idx
