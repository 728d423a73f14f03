"""Lowering of abstract gates onto {H, X, Z, RY, CNOT, CZ}.

Every two-qubit abstract gate is rewritten with exactly one entangling
gate. Convention: RY(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].

Controlled rotation CG(p), control active on |1>:

    RY(a) target, CNOT control->target, RY(-a) target, with a = asin(sqrt(p)).

    Control |0>: the CNOT is inert and RY(-a) RY(a) = I, so |c=0, t=0> is
    fixed exactly. Control |1>: RY(-a) X RY(a) = [[sin a, cos a],
    [cos a, -sin a]], sending |0> to sqrt(p)|0> + sqrt(1-p)|1>. The
    rewrite therefore matches CG(p) only on inputs whose target is |0>;
    synthesis guarantees that every CG it emits targets a qubit no
    earlier gate has touched, so the assumption always holds there.

Zero-controlled Hadamard ZERO_CH, control active on |0>:

    RY(-pi/4) target, CZ control target, Z target, RY(pi/4) target.

    Control |0>: the CZ is inert and RY(pi/4) Z RY(-pi/4) = H (rotating
    the reflection axis of Z by pi/8 yields the Hadamard reflection).
    Control |1>: the CZ contributes a second Z, Z Z = I, and the RY pair
    cancels, leaving the identity with no stray phase. Exact on the whole
    two-qubit space, so no input assumption is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ir import Circuit, CircuitBuilder, Gate, GateKind, Level, entangler_count

TARGET_ZERO = "target-in-|0>"


@dataclass(frozen=True)
class Assumption:
    """Marks an abstract gate whose rewrite is exact only on |0> targets."""

    gate_index: int
    assumption: str = TARGET_ZERO


@dataclass(frozen=True)
class LoweringReport:
    entanglers_emitted: int
    single_qubit_gates_emitted: int
    assumptions_used: tuple[Assumption, ...] = field(default_factory=tuple)


def _check_prob(p: Fraction | float) -> float:
    if not 0 <= p <= 1:
        raise ValueError(f"prob {p} outside [0, 1]")
    return float(p)


def lower_g(p: Fraction | float, target: int) -> list[Gate]:
    """G(p) = RY(2 acos sqrt(p)), exactly, with no entangler."""
    return [Gate.ry(target, 2.0 * math.acos(math.sqrt(_check_prob(p))))]


def lower_cg(p: Fraction | float, control: int, target: int) -> list[Gate]:
    """One-CNOT rewrite of CG(p), exact on |0> targets (see module doc)."""
    a = math.asin(math.sqrt(_check_prob(p)))
    return [Gate.ry(target, a), Gate.cnot(control, target), Gate.ry(target, -a)]


def lower_zero_ch(control: int, target: int) -> list[Gate]:
    """One-CZ rewrite of the zero-controlled Hadamard, exact everywhere."""
    quarter = math.pi / 4.0
    return [
        Gate.ry(target, -quarter),
        Gate.cz(control, target),
        Gate.z(target),
        Gate.ry(target, quarter),
    ]


def lower(circuit: Circuit) -> tuple[Circuit, LoweringReport]:
    """Rewrite an abstract circuit into the lowered gate set.

    Gates already in the lowered set pass through unchanged. The report
    counts entanglers and single-qubit gates in the output and records,
    per abstract gate index, every use of the |0>-target assumption.
    """
    if circuit.level is not Level.ABSTRACT:
        raise ValueError("circuit is already lowered")
    builder = CircuitBuilder(circuit.n_qubits, Level.LOWERED)
    assumptions: list[Assumption] = []
    for i, gate in enumerate(circuit.gates):
        if gate.kind is GateKind.G:
            replacement = lower_g(gate.prob, gate.target)
        elif gate.kind is GateKind.CG:
            replacement = lower_cg(gate.prob, gate.control, gate.target)
            assumptions.append(Assumption(gate_index=i))
        elif gate.kind is GateKind.ZERO_CH:
            replacement = lower_zero_ch(gate.control, gate.target)
        else:
            replacement = [gate]
        for lowered_gate in replacement:
            builder.append(lowered_gate)
    lowered = builder.freeze()
    entanglers = entangler_count(lowered)
    report = LoweringReport(
        entanglers_emitted=entanglers,
        single_qubit_gates_emitted=len(lowered) - entanglers,
        assumptions_used=tuple(assumptions),
    )
    return lowered, report
