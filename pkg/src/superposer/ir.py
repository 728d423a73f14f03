"""Circuit intermediate representation.

Circuits exist at two levels. Abstract circuits may use the full gate
vocabulary, including the probability-weighted rotation G, its controlled
form CG, and the zero-controlled Hadamard ZERO_CH. Lowered circuits are
restricted to {H, X, Z, RY, CNOT, CZ}.

Register convention: qubit 0 is the most significant bit of the basis
index, so basis state |j0 j1 ... j_{n-1}> has index sum(j_k * 2**(n-1-k)).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Level(Enum):
    """Abstraction level of a circuit."""

    ABSTRACT = "abstract"
    LOWERED = "lowered"


class GateKind(Enum):
    H = "h"
    X = "x"
    Z = "z"
    RY = "ry"
    G = "g"
    CG = "cg"
    ZERO_CH = "zero_ch"
    CNOT = "cnot"
    CZ = "cz"


TWO_QUBIT_KINDS = frozenset({GateKind.CG, GateKind.ZERO_CH, GateKind.CNOT, GateKind.CZ})
PROB_KINDS = frozenset({GateKind.G, GateKind.CG})
LOWERED_KINDS = frozenset(
    {GateKind.H, GateKind.X, GateKind.Z, GateKind.RY, GateKind.CNOT, GateKind.CZ}
)

# Gates that lower to (or already are) a two-qubit entangling primitive.
ABSTRACT_ENTANGLERS = frozenset({GateKind.CG, GateKind.ZERO_CH})
LOWERED_ENTANGLERS = frozenset({GateKind.CNOT, GateKind.CZ})


@dataclass(frozen=True)
class Gate:
    """A single gate application.

    Field presence depends on the kind: ``control`` for two-qubit kinds,
    ``angle`` (radians) for RY, ``prob`` (an exact rational in [0, 1]) for
    G and CG. Everything else must be left unset.
    """

    kind: GateKind
    target: int
    control: int | None = None
    angle: float | None = None
    prob: Fraction | None = None

    def __post_init__(self) -> None:
        if self.target < 0:
            raise ValueError(f"target {self.target} must be non-negative")
        if self.kind in TWO_QUBIT_KINDS:
            if self.control is None:
                raise ValueError(f"{self.kind.name} requires a control qubit")
            if self.control < 0:
                raise ValueError(f"control {self.control} must be non-negative")
            if self.control == self.target:
                raise ValueError(f"{self.kind.name} control equals target ({self.target})")
        elif self.control is not None:
            raise ValueError(f"{self.kind.name} does not take a control qubit")

        if self.kind in PROB_KINDS:
            if self.prob is None:
                raise ValueError(f"{self.kind.name} requires a probability")
            if isinstance(self.prob, float):
                raise TypeError("prob must be an exact rational (Fraction), not float")
            if isinstance(self.prob, int):
                object.__setattr__(self, "prob", Fraction(self.prob))
            if not 0 <= self.prob <= 1:
                raise ValueError(f"prob {self.prob} outside [0, 1]")
        elif self.prob is not None:
            raise ValueError(f"{self.kind.name} does not take a probability")

        if self.kind is GateKind.RY:
            if self.angle is None:
                raise ValueError("RY requires an angle")
            object.__setattr__(self, "angle", float(self.angle))
            if not math.isfinite(self.angle):
                raise ValueError(f"angle {self.angle} must be finite")
        elif self.angle is not None:
            raise ValueError(f"{self.kind.name} does not take an angle")

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)

    @staticmethod
    def h(target: int) -> Gate:
        return Gate(GateKind.H, target)

    @staticmethod
    def x(target: int) -> Gate:
        return Gate(GateKind.X, target)

    @staticmethod
    def z(target: int) -> Gate:
        return Gate(GateKind.Z, target)

    @staticmethod
    def ry(target: int, angle: float) -> Gate:
        return Gate(GateKind.RY, target, angle=angle)

    @staticmethod
    def g(target: int, prob: Fraction) -> Gate:
        return Gate(GateKind.G, target, prob=prob)

    @staticmethod
    def cg(control: int, target: int, prob: Fraction) -> Gate:
        return Gate(GateKind.CG, target, control=control, prob=prob)

    @staticmethod
    def zero_ch(control: int, target: int) -> Gate:
        return Gate(GateKind.ZERO_CH, target, control=control)

    @staticmethod
    def cnot(control: int, target: int) -> Gate:
        return Gate(GateKind.CNOT, target, control=control)

    @staticmethod
    def cz(control: int, target: int) -> Gate:
        return Gate(GateKind.CZ, target, control=control)


def _check_gate(gate: Gate, n_qubits: int, level: Level, index: int) -> None:
    for q in gate.qubits:
        if q >= n_qubits:
            raise ValueError(f"gate {index}: qubit {q} out of range for {n_qubits} qubits")
    if level is Level.LOWERED and gate.kind not in LOWERED_KINDS:
        raise ValueError(f"gate {index}: {gate.kind.name} not allowed in a lowered circuit")


@dataclass(frozen=True)
class Circuit:
    """An immutable gate sequence on a fixed-width register."""

    n_qubits: int
    gates: tuple[Gate, ...]
    level: Level = Level.ABSTRACT

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits {self.n_qubits} must be at least 1")
        object.__setattr__(self, "gates", tuple(self.gates))
        for i, gate in enumerate(self.gates):
            _check_gate(gate, self.n_qubits, self.level, i)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


class CircuitBuilder:
    """Append-only circuit constructor; ``freeze()`` yields the Circuit.

    A frozen builder rejects further appends, so a Circuit can never be
    extended through the builder that produced it.
    """

    def __init__(self, n_qubits: int, level: Level = Level.ABSTRACT):
        if n_qubits < 1:
            raise ValueError(f"n_qubits {n_qubits} must be at least 1")
        self.n_qubits = n_qubits
        self.level = level
        self._gates: list[Gate] = []
        self._frozen = False

    def append(self, gate: Gate) -> CircuitBuilder:
        if self._frozen:
            raise RuntimeError("builder already frozen")
        _check_gate(gate, self.n_qubits, self.level, len(self._gates))
        self._gates.append(gate)
        return self

    def h(self, target: int) -> CircuitBuilder:
        return self.append(Gate.h(target))

    def x(self, target: int) -> CircuitBuilder:
        return self.append(Gate.x(target))

    def z(self, target: int) -> CircuitBuilder:
        return self.append(Gate.z(target))

    def ry(self, target: int, angle: float) -> CircuitBuilder:
        return self.append(Gate.ry(target, angle))

    def g(self, target: int, prob: Fraction) -> CircuitBuilder:
        return self.append(Gate.g(target, prob))

    def cg(self, control: int, target: int, prob: Fraction) -> CircuitBuilder:
        return self.append(Gate.cg(control, target, prob))

    def zero_ch(self, control: int, target: int) -> CircuitBuilder:
        return self.append(Gate.zero_ch(control, target))

    def cnot(self, control: int, target: int) -> CircuitBuilder:
        return self.append(Gate.cnot(control, target))

    def cz(self, control: int, target: int) -> CircuitBuilder:
        return self.append(Gate.cz(control, target))

    def freeze(self) -> Circuit:
        self._frozen = True
        return Circuit(self.n_qubits, tuple(self._gates), self.level)


def gate_histogram(circuit: Circuit) -> dict[GateKind, int]:
    """Count gates by kind."""
    return dict(Counter(gate.kind for gate in circuit.gates))


def entangler_count(circuit: Circuit) -> int:
    """Number of two-qubit entangling gates.

    Abstract circuits count CG and ZERO_CH (each lowers to exactly one
    entangler); lowered circuits count CNOT and CZ.
    """
    kinds = ABSTRACT_ENTANGLERS if circuit.level is Level.ABSTRACT else LOWERED_ENTANGLERS
    return sum(1 for gate in circuit.gates if gate.kind in kinds)


def depth(circuit: Circuit) -> int:
    """Circuit depth under greedy as-early-as-possible layering."""
    frontier = [0] * circuit.n_qubits
    for gate in circuit.gates:
        layer = 1 + max(frontier[q] for q in gate.qubits)
        for q in gate.qubits:
            frontier[q] = layer
    return max(frontier, default=0)
