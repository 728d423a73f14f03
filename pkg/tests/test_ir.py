import dataclasses
from fractions import Fraction

import pytest

from superposer.ir import (
    Circuit,
    CircuitBuilder,
    Gate,
    GateKind,
    Level,
    depth,
    entangler_count,
    gate_histogram,
)
from superposer.lowering import lower
from superposer.synthesis import synthesize


def test_builder_appends_in_order():
    circuit = CircuitBuilder(2).h(0).cnot(0, 1).freeze()
    assert [g.kind for g in circuit.gates] == [GateKind.H, GateKind.CNOT]
    assert circuit.n_qubits == 2
    assert circuit.level is Level.ABSTRACT


def test_builder_rejects_out_of_range_operand():
    with pytest.raises(ValueError, match="out of range"):
        CircuitBuilder(2).h(2)
    with pytest.raises(ValueError, match="out of range"):
        CircuitBuilder(2).cnot(0, 5)


def test_lowered_builder_rejects_abstract_kinds():
    builder = CircuitBuilder(2, Level.LOWERED)
    with pytest.raises(ValueError, match="not allowed"):
        builder.zero_ch(0, 1)
    with pytest.raises(ValueError, match="not allowed"):
        builder.g(0, Fraction(1, 2))


def test_frozen_builder_rejects_append():
    builder = CircuitBuilder(1)
    builder.freeze()
    with pytest.raises(RuntimeError, match="frozen"):
        builder.h(0)


def test_circuit_fields_are_immutable():
    circuit = CircuitBuilder(1).h(0).freeze()
    with pytest.raises(dataclasses.FrozenInstanceError):
        circuit.n_qubits = 2


def test_circuit_rejects_zero_width():
    with pytest.raises(ValueError):
        Circuit(0, ())


def test_lowered_circuit_rejects_abstract_gate():
    with pytest.raises(ValueError, match="not allowed"):
        Circuit(2, (Gate.zero_ch(0, 1),), Level.LOWERED)


def test_gate_control_must_differ_from_target():
    with pytest.raises(ValueError, match="control equals target"):
        Gate.cnot(1, 1)


def test_gate_field_presence_rules():
    with pytest.raises(ValueError, match="requires a probability"):
        Gate(GateKind.G, 0)
    with pytest.raises(ValueError, match="requires an angle"):
        Gate(GateKind.RY, 0)
    with pytest.raises(ValueError, match="does not take an angle"):
        Gate(GateKind.H, 0, angle=1.0)
    with pytest.raises(ValueError, match="does not take a control"):
        Gate(GateKind.H, 0, control=1)
    with pytest.raises(ValueError, match="requires a control"):
        Gate(GateKind.CNOT, 0)
    with pytest.raises(ValueError, match="does not take a probability"):
        Gate(GateKind.Z, 0, prob=Fraction(1, 2))


def test_gate_prob_must_be_exact():
    with pytest.raises(TypeError, match="exact rational"):
        Gate.g(0, 0.5)
    assert Gate.g(0, 1).prob == Fraction(1)


def test_gate_prob_range():
    with pytest.raises(ValueError, match="outside"):
        Gate.g(0, Fraction(3, 2))


def test_gate_angle_must_be_finite():
    with pytest.raises(ValueError, match="finite"):
        Gate.ry(0, float("nan"))


def test_gate_histogram_examples():
    assert gate_histogram(synthesize(16)) == {GateKind.H: 4}
    assert gate_histogram(synthesize(17)) == {GateKind.G: 1, GateKind.ZERO_CH: 4}
    assert gate_histogram(synthesize(1)) == {}


def test_gate_histogram_totals_match_length():
    for N in (2, 7, 29, 100, 255):
        circuit = synthesize(N)
        assert sum(gate_histogram(circuit).values()) == len(circuit)


def test_entangler_count_examples():
    assert entangler_count(synthesize(7)) == 3
    assert entangler_count(synthesize(16)) == 0
    lowered31, _ = lower(synthesize(31))
    assert entangler_count(lowered31) == 7


def test_entangler_count_is_preserved_by_lowering():
    for N in range(2, 65):
        abstract = synthesize(N)
        lowered, _ = lower(abstract)
        assert entangler_count(abstract) == entangler_count(lowered)


def test_circuits_compare_by_value():
    assert synthesize(7) == synthesize(7)
    assert tuple(synthesize(29)) == tuple(synthesize(29))
    assert synthesize(7) != synthesize(11)


def test_depth():
    assert depth(CircuitBuilder(3).freeze()) == 0
    assert depth(CircuitBuilder(3).h(0).h(1).h(2).freeze()) == 1
    assert depth(CircuitBuilder(2).h(0).cnot(0, 1).h(1).freeze()) == 3
