"""Synthesis of circuits preparing the uniform superposition over 0..N-1.

The construction splits N = 2**xi * M with M odd. The trailing xi qubits
receive plain Hadamards (they enumerate the 2**xi least significant index
values), and the leading qubits receive a branch-and-spread sequence for
the odd cofactor M built from G rotations, controlled G rotations, and
zero-controlled Hadamards. The entangling-gate total is g + m - 3, where
g is the number of set bits of N and m the bit width of M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ir import Circuit, CircuitBuilder


@dataclass(frozen=True)
class BitOrderConvention:
    """Fixed register convention used everywhere in this package.

    Qubit ``msb_qubit`` (always 0) holds the most significant bit, so the
    basis index of |j0 j1 ... j_{n-1}> is sum(j_k * 2**(n-1-k)).
    """

    msb_qubit: int = 0

    def index_of(self, bits: Sequence[int]) -> int:
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit {b!r} must be 0 or 1")
            value = value << 1 | b
        return value

    def bits_of(self, index: int, n_qubits: int) -> tuple[int, ...]:
        if not 0 <= index < 1 << n_qubits:
            raise ValueError(f"index {index} out of range for {n_qubits} qubits")
        return tuple(index >> (n_qubits - 1 - k) & 1 for k in range(n_qubits))


BIT_ORDER = BitOrderConvention()


@dataclass(frozen=True)
class SynthesisPlan:
    """Arithmetic decomposition of N that drives circuit construction.

    N:  the number of basis states to superpose.
    n:  register width, max(1, ceil(log2 N)).
    xi: exponent of the even part, N = 2**xi * M.
    M:  odd cofactor.
    m:  bit width of M (0 when M == 1); the odd-part subcircuit acts on
        qubits 0..m-1.
    g:  number of set bits of N (equivalently of M).
    k:  exponents of the set bits of M above bit 0, strictly decreasing.
        M == 2**k[0] + ... + 2**k[g-2] + 1 whenever M > 1.
    p:  branch probabilities for the G and CG rotations. p[i] is the
        probability mass kept on the |0> branch at split i, as an exact
        rational: p[i] = 2**k[i] / (M - sum of the 2**k[l] already split).
    """

    N: int
    n: int
    xi: int
    M: int
    m: int
    g: int
    k: tuple[int, ...]
    p: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.N != (1 << self.xi) * self.M:
            raise ValueError("inconsistent plan: N != 2**xi * M")
        if self.g != bin(self.N).count("1"):
            raise ValueError("inconsistent plan: g is not the set-bit count of N")
        if len(self.k) != max(self.g - 1, 0) or len(self.p) != max(self.g - 1, 0):
            raise ValueError("inconsistent plan: k and p must have g - 1 entries")


def factor(N: int) -> tuple[int, int]:
    """Split N into (xi, M) with N = 2**xi * M and M odd."""
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    xi = (N & -N).bit_length() - 1
    return xi, N >> xi


def binary_decompose(M: int) -> tuple[int, tuple[int, ...]]:
    """Set-bit count g of an odd M >= 3 and the exponents above bit 0.

    Returns (g, k) with k strictly decreasing and
    M == 2**k[0] + ... + 2**k[g-2] + 1.
    """
    if M < 3 or M % 2 == 0:
        raise ValueError(f"M must be an odd integer >= 3, got {M}")
    g = bin(M).count("1")
    k = tuple(i for i in range(M.bit_length() - 1, 0, -1) if M >> i & 1)
    return g, k


def rotation_params(M: int) -> tuple[Fraction, ...]:
    """Branch probabilities for the odd-part subcircuit, as exact rationals.

    Split i peels probability mass 2**k[i] off the not-yet-assigned
    remainder, so the denominator shrinks by 2**k[i-1] at each step:
    p[i] = 2**k[i] / (M - 2**k[0] - ... - 2**k[i-1]).
    """
    g, k = binary_decompose(M)
    remaining = M
    probs = [Fraction(1 << k[0], remaining)]
    for i in range(1, g - 1):
        remaining -= 1 << k[i - 1]
        probs.append(Fraction(1 << k[i], remaining))
    return tuple(probs)


def plan(N: int) -> SynthesisPlan:
    """Compute the full arithmetic decomposition for N."""
    xi, M = factor(N)
    n = max(1, (N - 1).bit_length())
    if M == 1:
        return SynthesisPlan(N=N, n=n, xi=xi, M=1, m=0, g=1, k=(), p=())
    g, k = binary_decompose(M)
    return SynthesisPlan(N=N, n=n, xi=xi, M=M, m=k[0] + 1, g=g, k=k, p=rotation_params(M))


def synthesize(N: int) -> Circuit:
    """Emit the abstract circuit preparing (1/sqrt(N)) sum_{j<N} |j>.

    For M > 1 the odd-part subcircuit on qubits 0..m-1 proceeds in three
    phases:

    1. G(p[0]) on qubit 0 splits off the heaviest power-of-two block,
       then CG(p[i]) splits the remainder block for each further set bit,
       always targeting a qubit no earlier gate has touched.
    2. Zero-controlled Hadamards controlled by the last split qubit fan
       the final block out across the low qubits.
    3. Zero-controlled Hadamards walk back up the split chain, fanning
       each earlier block out to its full power-of-two width.

    The H layer on the trailing xi qubits then doubles every index xi
    times, which is what makes the N indices consecutive from 0.
    """
    pl = plan(N)
    builder = CircuitBuilder(pl.n)
    if pl.M > 1:
        m, g, k, p = pl.m, pl.g, pl.k, pl.p
        builder.g(0, p[0])
        for i in range(1, g - 1):
            builder.cg(m - k[i - 1] - 1, m - k[i] - 1, p[i])
        last = k[g - 2]
        for j in range(last):
            builder.zero_ch(m - last - 1, m - last + j)
        for j in range(g - 2, 0, -1):
            for offset in range(1, k[j - 1] - k[j] + 1):
                builder.zero_ch(m - k[j - 1] - 1, m - k[j] - offset)
    for q in range(pl.n - pl.xi, pl.n):
        builder.h(q)
    return builder.freeze()
