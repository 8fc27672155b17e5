"""Canonical decompositions x = epsilon * delta * y^q and the tables of
unit classes behind them.

Every nonzero p-adic x can be funneled into a product of a small unit
factor epsilon, a power-of-p factor delta = p^j with j in [0, q-1], and a
q-th power.  Which epsilons are needed depends on the relationship between
q and p:

  q = p (odd)       epsilon is 1 when the unit part already passes the
                    p-th power digit test, else the two-digit integer
                    d0 + d1*p, which then always lies in the set returned
                    by epsilon_set(p).
  q prime, q < p    if p != 1 (mod q) every unit is a q-th power and
                    epsilon = 1; if p = 1 (mod q) a fixed non-q-th-power
                    unit eta (the smallest primitive root mod p) is used
                    and epsilon = eta^j for the unique j in [0, q-1] that
                    makes the remaining unit a q-th power.

j_no_solution_table lists, per odd prime, the second digits j for which
d0 + j*p can never match d0^p mod p^2, i.e. the j that force a nontrivial
epsilon no matter what the first digit is.
"""

import math
from dataclasses import dataclass

from .congruence import is_prime, is_qth_residue, find_primitive_root
from .padic_core import PAdic, PrecisionError
from .roots import (
    LiftContradictionError,
    check_coprime,
    check_qp,
    check_square,
    lift_roots,
    _qp_digit_condition,
)

FORM_QP = "q_equals_p"
FORM_PLAIN = "coprime_plain"
FORM_ETA = "coprime_with_eta"


@dataclass(frozen=True)
class Decomposition:
    """x = epsilon * p^delta_exponent * y^q, exact to y's precision."""

    form: str
    epsilon: PAdic
    delta_exponent: int
    y: PAdic
    q: int
    epsilon_int: int | None = None
    eta: PAdic | None = None
    eta_exponent: int | None = None

    def recompose(self) -> PAdic:
        return self.epsilon.mul(self.y.pow_nat(self.q)).shift(self.delta_exponent)


def find_nonresidue_unit(p: int, q: int, precision: int = 16) -> PAdic:
    """The smallest primitive root mod p, embedded as a p-adic unit.  Only
    meaningful when p = 1 (mod q), where it is guaranteed not to be a q-th
    power (its discrete log is 1, which gcd(q, p-1) > 1 cannot divide)."""
    if not is_prime(p) or not is_prime(q):
        raise ValueError("both p and q must be prime")
    if (p - 1) % q != 0:
        raise ValueError(
            f"p={p} is not 1 mod q={q}; every unit is a q-th power there"
        )
    r = find_primitive_root(p)
    eta = PAdic.from_int(r, p, precision)
    verdict = check_square(eta) if q == 2 else check_coprime(eta, q)
    if verdict.solvable:
        raise LiftContradictionError(
            f"primitive root {r} mod {p} tested as a {q}-th power"
        )
    return eta


def verify_c1(p: int, q: int) -> bool:
    """Check that p^i * eta^j is never a q-th power for (i, j) in
    [0, q-1]^2 other than (0, 0).  True means the q^2 classes
    {p^i eta^j y^q} are genuinely distinct."""
    eta = find_nonresidue_unit(p, q, precision=8)
    for i in range(q):
        for j in range(q):
            if i == 0 and j == 0:
                continue
            val = eta.pow_nat(j).shift(i) if j else PAdic.one(p, 8).shift(i)
            verdict = check_square(val) if q == 2 else check_coprime(val, q)
            if verdict.solvable:
                return False
    return True


def classify_coprime(x: PAdic, q: int) -> Decomposition:
    """Decompose x as epsilon * p^i * y^q for prime q < p with gcd(q,p)=1.

    i is the valuation mod q.  When p != 1 (mod q), epsilon is 1.  When
    p = 1 (mod q), epsilon = eta^j for the smallest j in [0, q-1] making
    the leftover unit a q-th power; the scan is guaranteed to hit one.
    """
    if x.is_zero:
        raise ValueError("cannot decompose zero")
    p = x.p
    if not is_prime(q) or q >= p:
        raise ValueError("classifier needs a prime exponent q < p")
    i = x.gamma % q
    n_digits = x.precision
    if (p - 1) % q != 0:
        w = x.shift(-i)
        y = lift_roots(w, q, n_digits).roots[0]
        return Decomposition(
            FORM_PLAIN, PAdic.one(p, n_digits), i, y, q, epsilon_int=1
        )
    eta = find_nonresidue_unit(p, q, n_digits)
    for j in range(q):
        eps = eta.pow_nat(j) if j else PAdic.one(p, n_digits)
        w = x.shift(-i).div(eps)
        if is_qth_residue(w.unit % p, q, p):
            y = lift_roots(w, q, n_digits).roots[0]
            return Decomposition(
                FORM_ETA,
                eps,
                i,
                y,
                q,
                epsilon_int=1 if j == 0 else None,
                eta=eta,
                eta_exponent=j,
            )
    raise LiftContradictionError(
        f"no power of eta in [0, {q}) exposed a {q}-th power; "
        "the coset decomposition failed"
    )


def classify_p(x: PAdic) -> Decomposition:
    """Decompose x as epsilon * p^j * y^p for odd p.

    epsilon is 1 when the unit part passes the p-th power digit test,
    otherwise the integer d0 + d1*p (which then lies in epsilon_set(p));
    j is the valuation mod p.
    """
    if x.is_zero:
        raise ValueError("cannot decompose zero")
    p = x.p
    if p == 2:
        raise ValueError("the q = p classifier is only defined for odd p")
    if x.precision < 2:
        raise PrecisionError("decomposition reads two digits; need precision >= 2")
    d = x.digits_to(2)
    j = x.gamma % p
    n_digits = x.precision
    passes = _qp_digit_condition(p, d[0], d[1])
    if passes:
        w = x.shift(-j)
        y = lift_roots(w, p, n_digits - 1).roots[0]
        return Decomposition(
            FORM_QP, PAdic.one(p, n_digits), j, y, p, epsilon_int=1
        )
    eps_int = d[0] + d[1] * p
    eps = PAdic.from_int(eps_int, p, n_digits)
    w = x.shift(-j).div(eps)
    y = lift_roots(w, p, n_digits - 1).roots[0]
    return Decomposition(FORM_QP, eps, j, y, p, epsilon_int=eps_int)


def epsilon_set(p: int) -> tuple[int, ...]:
    """The unit classes needed to absorb non-p-th-power unit parts:
    {1} together with every two-digit integer i + j*p (i in [1, p-1],
    j in [0, p-1]) failing the digit test i^p = i + j*p (mod p^2)."""
    if not is_prime(p) or p == 2:
        raise ValueError("epsilon_set is defined for odd primes")
    out = {1}
    pp = p * p
    for i in range(1, p):
        ip = pow(i, p, pp)
        for j in range(p):
            if ip != (i + j * p) % pp:
                out.add(i + j * p)
    return tuple(sorted(out))


def j_no_solution_table(p_max: int) -> dict[int, tuple[int, ...]]:
    """For each odd prime p <= p_max, the second digits j in [0, p-1] such
    that i^p = i + j*p (mod p^2) has no solution i in [1, p-1]."""
    if p_max > 10_000:
        raise ValueError("table bound capped at 10000")
    table: dict[int, tuple[int, ...]] = {}
    for p in range(3, p_max + 1):
        if not is_prime(p):
            continue
        pp = p * p
        solvable = set()
        for i in range(1, p):
            ip = pow(i, p, pp)
            # i^p = i + j*p (mod p^2) pins j = (i^p - i)/p mod p
            solvable.add(((ip - i) % pp) // p)
        table[p] = tuple(j for j in range(p) if j not in solvable)
    return table


def derived_epsilon_set(p: int) -> tuple[int, ...]:
    """{1} plus every i + j*p with j drawn from the no-solution table:
    the epsilon classes forced purely by the second digit."""
    js = j_no_solution_table(p).get(p, ())
    out = {1}
    for j in js:
        for i in range(1, p):
            out.add(i + j * p)
    return tuple(sorted(out))
