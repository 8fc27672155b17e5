"""Carry bookkeeping for powers of digit expansions.

Raising d0 + d1*p + d2*p**2 + ... to the q-th power and collecting the
coefficient of p**k (as a polynomial identity, before any digit carrying)
gives

    q * d0**(q-1) * dk  +  N_k,

where N_k sums, over all exponent tuples (m_0, ..., m_{k-1}) with
m_0 + ... + m_{k-1} = q and 1*m_1 + 2*m_2 + ... + (k-1)*m_{k-1} = k, the
terms  q!/(m_0! ... m_{k-1}!) * d0**m_0 * ... * d_{k-1}**m_{k-1}.  N_1 = 0
since no tuple meets the weight constraint.

For q = p the numbers N_k control which digit positions of a p-th power are
forced: when every digit is nonzero, p divides N_k exactly when p does not
divide k.  The helpers here compute N_k both by direct enumeration and by an
exact generating-polynomial route, count binomial carries, and expose the
reduced quantity ntilde_pk that is independent of the last digit it
nominally involves.
"""

import math
from dataclasses import dataclass


def multinomial_coeff(q: int, parts) -> int:
    """q! / (m_0! * m_1! * ...) for parts summing to q, computed as a
    telescoping product of binomials so every intermediate is an integer."""
    parts = list(parts)
    if any(m < 0 for m in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != q:
        raise ValueError(f"parts {parts} do not sum to {q}")
    coeff = 1
    total = 0
    for m in parts:
        total += m
        coeff *= math.comb(total, m)
    return coeff


@dataclass(frozen=True)
class NkTerm:
    """One term of N_k: exponent tuple (m_0, ..., m_{k-1}) plus its
    multinomial coefficient."""

    exponents: tuple[int, ...]
    coefficient: int

    def evaluate(self, digits) -> int:
        val = self.coefficient
        for d, m in zip(digits, self.exponents):
            if m:
                val *= d**m
        return val


def nk_terms(q: int, k: int) -> list[NkTerm]:
    """All exponent tuples of N_k with their coefficients, in lexicographic
    order of (m_1, ..., m_{k-1}).  Only digits d0..d_{k-1} appear."""
    if q < 1:
        raise ValueError("exponent q must be at least 1")
    if k < 1:
        raise ValueError("digit position k must be at least 1")
    out: list[NkTerm] = []
    tail = [0] * k  # m_1..m_{k-1} chosen, m_0 derived

    def rec(pos: int, count_left: int, weight_left: int) -> None:
        if pos == 0:
            if weight_left == 0:
                tail[0] = count_left
                exps = tuple(tail)
                out.append(NkTerm(exps, multinomial_coeff(q, exps)))
            return
        cap = min(count_left, weight_left // pos)
        for m in range(cap + 1):
            tail[pos] = m
            rec(pos - 1, count_left - m, weight_left - pos * m)
        tail[pos] = 0

    if k > 1:
        rec(k - 1, q, k)
    return out


def compute_Nk(q: int, digits, k: int) -> int:
    """Exact N_k by enumerating every admissible exponent tuple."""
    digits = list(digits)
    if len(digits) < k:
        raise ValueError(f"need at least {k} digits d0..d{k-1}")
    return sum(t.evaluate(digits) for t in nk_terms(q, k))


def nk_sequence(q: int, digits, k_max: int) -> list[int]:
    """[N_1, ..., N_kmax], exactly, via one big-integer exponentiation.

    The digit polynomial is packed into an integer in a base wide enough
    that no coefficient of its q-th power can spill into a neighbour, so
    the polynomial coefficients can be read straight back off the power.
    """
    digits = [int(d) for d in digits]
    if q < 1:
        raise ValueError("exponent q must be at least 1")
    if any(d < 0 for d in digits):
        raise ValueError("digits must be non-negative")
    # every coefficient of the power is at most (sum of digits)^q
    total = max(sum(digits), 1)
    bits = max(total.bit_length() * q + 4, 8)
    packed = 0
    for i, d in enumerate(digits):
        packed |= d << (bits * i)
    power = packed**q
    mask = (1 << bits) - 1
    d0 = digits[0]
    lead = q * d0 ** (q - 1)
    out = []
    for k in range(1, k_max + 1):
        ck = (power >> (bits * k)) & mask
        dk = digits[k] if k < len(digits) else 0
        out.append(ck - lead * dk)
    return out


def nk_dichotomy(p: int, k: int, digits) -> tuple[bool, bool]:
    """For q = p, the pair (p divides N_k, p divides k).

    With every supplied digit nonzero these are strict opposites; zero
    digits can break that, so callers choosing digit vectors should keep
    them nonzero when relying on the dichotomy.
    """
    digits = list(digits)
    if len(digits) < k:
        raise ValueError(f"need at least {k} digits d0..d{k-1}")
    nk = nk_sequence(p, digits, k)[k - 1]
    return (nk % p == 0, k % p == 0)


def binom_valuation_kummer(m: int, n: int, p: int) -> int:
    """Exponent of p in binomial(m+n, m): the number of carries when adding
    m and n in base p."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be non-negative")
    carries = 0
    carry = 0
    while m or n or carry:
        s = m % p + n % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        m //= p
        n //= p
    return carries


def ntilde_pk(p: int, digits, k: int) -> int:
    """N_{pk} with its single d_{pk-1} term removed:

        ntilde = N_{pk} - p*(p-1) * d0**(p-2) * d1 * d_{pk-1}.

    The value does not depend on d_{pk-1}, so the digit vector may stop at
    position pk-2; a missing d_{pk-1} is treated as 0.
    """
    digits = list(digits)
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(digits) < p * k - 1:
        raise ValueError(f"need at least {p * k - 1} digits")
    if len(digits) < p * k:
        digits = digits + [0]
    n_pk = nk_sequence(p, digits, p * k)[p * k - 1]
    d_last = digits[p * k - 1]
    return n_pk - p * (p - 1) * digits[0] ** (p - 2) * digits[1] * d_last
