"""Finite-field scalars: GF(2) and prime fields GF(p) for odd primes p < 2**31.

Every value is kept as a canonical residue in [0, modulus).  Bulk GF(2)
data additionally has a packed representation, 64 cells per machine word,
for XOR/AND/popcount kernels (see pack_bits / unpack_bits).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3_215_031_751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The scalar domain: either GF(2) or GF(p) for an odd prime p < 2**31."""

    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not isinstance(p, int) or p < 2 or p >= MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [2, 2**31): got {p!r}")
        if p != 2 and (p % 2 == 0 or not is_prime(p)):
            raise ValueError(f"modulus must be 2 or an odd prime: got {p}")

    @classmethod
    def gf2(cls) -> "FieldSpec":
        return cls(2)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def kind(self) -> str:
        return "gf2" if self.modulus == 2 else "prime"

    # -- scalar arithmetic on canonical residues ---------------------------

    def validate(self, v: int) -> int:
        if not 0 <= v < self.modulus:
            raise ValueError(f"{v} is not a canonical residue mod {self.modulus}")
        return int(v)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError(f"no inverse of 0 in GF({self.modulus})")
        return pow(a, self.modulus - 2, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element(self, v: int) -> "FieldElement":
        return FieldElement(self, self.validate(v))


@dataclass(frozen=True)
class FieldElement:
    """A single field value; all operators reject mixed-field operands."""

    spec: FieldSpec
    value: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(
                f"mixed-field operands: GF({self.spec.modulus}) vs GF({other.spec.modulus})"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.div(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __int__(self) -> int:
        return self.value


# -- packed GF(2) vectors: 64 cells per uint64 word -------------------------

def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 array (last axis = cells) into uint64 words, LSB first."""
    bits = np.asarray(bits)
    n = bits.shape[-1]
    n_words = (n + 63) // 64
    padded = np.zeros(bits.shape[:-1] + (n_words * 64,), dtype=np.uint64)
    padded[..., :n] = bits & 1
    shifts = np.arange(64, dtype=np.uint64)
    lanes = padded.reshape(bits.shape[:-1] + (n_words, 64)) << shifts
    return np.bitwise_or.reduce(lanes, axis=-1)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of pack_bits: recover the first n cells as an int64 0/1 array."""
    words = np.asarray(words, dtype=np.uint64)
    pos = np.arange(n, dtype=np.uint64)
    return ((words[..., pos // 64] >> (pos % 64)) & 1).astype(np.int64)


def popcount(words: np.ndarray) -> int:
    """Total number of set bits across a packed word array."""
    return int(np.bitwise_count(np.asarray(words, dtype=np.uint64)).sum())
