"""Exact two-copy fermionic beamsplitter protocol.

Each copy of the system carries a single fermion whose internal level j is
entangled with an environment vector |j psi>.  Two copies enter a 50:50
beamsplitter (input ports 1 and 2, output ports 3 and 4); the probability
that both fermions leave through the same output port equals the
second-order volume e_2 of the reduced-density-matrix spectrum.

Modes are (port, level) pairs with 0-based levels, globally ordered
lexicographically; every fermionic sign is derived from sorting creation
operators into that order.  Same-mode double occupation is structurally
unrepresentable (the pair is dropped at insertion, b+ b+ = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import OrderOutOfRangeError, WrongPortDomainError
from .states import PureBipartiteState, ReducedDensityMatrix, projected_states

Mode = tuple[int, int]  # (port, level)

IN_PORTS = (1, 2)
OUT_PORTS = (3, 4)

# 50:50 convention: a+_(1) -> (b+_(3) - b+_(4)) / sqrt(2),
#                   a+_(2) -> (b+_(3) + b+_(4)) / sqrt(2), level-preserving.
_SPLITTER = {
    1: ((3, 1.0 / np.sqrt(2.0)), (4, -1.0 / np.sqrt(2.0))),
    2: ((3, 1.0 / np.sqrt(2.0)), (4, 1.0 / np.sqrt(2.0))),
}


@dataclass(frozen=True)
class TwoFermionJointState:
    """Two-fermion Fock amplitudes keyed by a strictly ordered mode pair.

    Each value is the environment vector in H_R (x) H_R (length d^2)
    attached to the creation-operator pair of the key.
    """

    d: int
    terms: dict[tuple[Mode, Mode], np.ndarray]

    def __post_init__(self):
        frozen = {}
        for (m1, m2), env in self.terms.items():
            if not m1 < m2:
                raise ValueError(f"mode pair {m1}, {m2} not strictly ordered")
            env = np.asarray(env, dtype=complex)
            if env.shape != (self.d * self.d,):
                raise ValueError(f"environment length {env.shape} != d^2 = {self.d**2}")
            env = env.copy()
            env.flags.writeable = False
            frozen[(m1, m2)] = env
        object.__setattr__(self, "terms", frozen)

    def total_norm_squared(self) -> float:
        return float(sum(np.vdot(env, env).real for env in self.terms.values()))

    def ports(self) -> set[int]:
        return {m[0] for pair in self.terms for m in pair}


def ordered_pair(m1: Mode, m2: Mode, env: np.ndarray):
    """Canonicalize a creation-operator pair.

    Returns (key, signed_env), or None when the modes coincide (Pauli
    exclusion).  Swapping the two operators flips the sign of the
    environment, per the anticommutation rule.
    """
    if m1 == m2:
        return None
    if m1 < m2:
        return (m1, m2), env
    return (m2, m1), -env


def _accumulate(acc: dict, m1: Mode, m2: Mode, env: np.ndarray):
    res = ordered_pair(m1, m2, env)
    if res is None:
        return
    key, signed = res
    if key in acc:
        acc[key] = acc[key] + signed
    else:
        acc[key] = signed.copy()


def build_two_copy_state(state: PureBipartiteState) -> TwoFermionJointState:
    """Joint state of two copies at the beamsplitter inputs.

    Copy c contributes a+_(j)^(c) with environment |j psi|; the joint term
    for (j1, j2) carries |j1 psi> (x) |j2 psi>.
    """
    vecs = projected_states(state, side="M").vectors
    acc: dict[tuple[Mode, Mode], np.ndarray] = {}
    for j1 in range(state.n):
        for j2 in range(state.n):
            env = np.kron(vecs[j1], vecs[j2])
            _accumulate(acc, (1, j1), (2, j2), env)
    return TwoFermionJointState(d=state.d, terms=acc)


def beamsplitter_transform(js: TwoFermionJointState) -> TwoFermionJointState:
    """Apply the 50:50 mode transformation to every creation-operator pair.

    Expands the product of the two transformed operators, drops same-mode
    terms, canonicalizes pair order with its fermionic sign, and merges
    duplicate keys.  Unitary: total norm is preserved.
    """
    if not js.ports() <= set(IN_PORTS):
        raise WrongPortDomainError(f"expected ports {IN_PORTS}, found {sorted(js.ports())}")
    acc: dict[tuple[Mode, Mode], np.ndarray] = {}
    for ((p1, l1), (p2, l2)), env in js.terms.items():
        for q1, c1 in _SPLITTER[p1]:
            for q2, c2 in _SPLITTER[p2]:
                _accumulate(acc, (q1, l1), (q2, l2), (c1 * c2) * env)
    return TwoFermionJointState(d=js.d, terms=acc)


def bunching_probability(js_out: TwoFermionJointState) -> float:
    """Probability that both fermions share an output port."""
    if not js_out.ports() <= set(OUT_PORTS):
        raise WrongPortDomainError(
            f"expected ports {OUT_PORTS}, found {sorted(js_out.ports())}"
        )
    return float(
        sum(
            np.vdot(env, env).real
            for ((p1, _), (p2, _)), env in js_out.terms.items()
            if p1 == p2
        )
    )


def fermionic_encoding_probability(state: PureBipartiteState) -> float:
    """Full protocol: build two copies, interfere, read the bunching weight."""
    return bunching_probability(beamsplitter_transform(build_two_copy_state(state)))


def antisym_weight(rho: ReducedDensityMatrix, r: int) -> float:
    """Weight of rho^(x)r on the fully antisymmetric subspace of r copies.

    Builds the antisymmetrizer as the signed sum over all r! permutation
    operators (applied by index contraction rather than as dense matrices)
    and returns Tr(P_A rho^(x)r), which equals e_r.  This is the r-copy
    generalization the interference protocol encodes; the explicit
    (r-1)-beamsplitter network itself is not simulated.
    """
    if not 1 <= r <= 6:
        raise OrderOutOfRangeError(f"r={r} outside the supported range 1..6")
    letters = "abcdefghijkl"
    total = 0.0
    mats = [rho.matrix] * r
    for perm in permutations(range(r)):
        # Tr(Pi_perm rho^(x)r) = sum_i prod_t rho[i_t, i_perm(t)]
        spec = ",".join(letters[t] + letters[perm[t]] for t in range(r))
        tr = np.einsum(spec + "->", *mats)
        total += _perm_sign(perm) * tr.real
    return total / math.factorial(r)


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
