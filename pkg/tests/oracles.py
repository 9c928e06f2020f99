"""Brute-force reference computations used by the tests.

These read only the raw operation tables and work with plain Python sets;
none of them call into the lattice, spectrum or topology code they check.
"""

from __future__ import annotations

from itertools import combinations, product


def tables(R):
    return R.mul_table.tolist(), R.add_table.tolist(), R.size, R.one


def is_ideal(R, subset: frozenset) -> bool:
    mul, add, n, _ = tables(R)
    if 0 not in subset:
        return False
    for a in subset:
        for b in subset:
            if add[a][b] not in subset:
                return False
        for r in range(n):
            if mul[r][a] not in subset:
                return False
    return True


def brute_ideals(R) -> set[frozenset]:
    """Scan every subset containing 0."""
    n = R.size
    others = list(range(1, n))
    out = set()
    for bits in range(1 << (n - 1)):
        sub = frozenset([0] + [others[i] for i in range(n - 1) if bits >> i & 1])
        if is_ideal(R, sub):
            out.add(sub)
    return out


def generated_ideals(R) -> set[frozenset]:
    """Every ideal, reached by adjoining one element at a time to known ideals.

    Works for rings far beyond the reach of the subset scan.
    """
    mul, add, n, _ = tables(R)

    def adjoin(I: frozenset, a: int) -> frozenset:
        J = set(I) | {mul[r][a] for r in range(n)}
        changed = True
        while changed:
            changed = False
            for x in list(J):
                for y in list(J):
                    z = add[x][y]
                    if z not in J:
                        J.add(z)
                        changed = True
        return frozenset(J)

    zero = frozenset({0})
    seen = {zero}
    todo = [zero]
    while todo:
        I = todo.pop()
        for a in range(n):
            if a not in I:
                J = adjoin(I, a)
                if J not in seen:
                    seen.add(J)
                    todo.append(J)
    return seen


def mult_set(R, gens) -> frozenset:
    mul, _, _, one = tables(R)
    S = {one} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(S):
            for b in list(S):
                if mul[a][b] not in S:
                    S.add(mul[a][b])
                    changed = True
    return frozenset(S)


def is_s_prime(R, S: frozenset, P: frozenset) -> bool:
    mul, _, n, _ = tables(R)
    if P & S or len(P) == n:
        return False
    for s in S:
        if all(mul[a][b] not in P or mul[s][a] in P or mul[s][b] in P
               for a in range(n) for b in range(n)):
            return True
    return False


def is_prime(R, P: frozenset) -> bool:
    mul, _, n, _ = tables(R)
    if len(P) == n:
        return False
    return all(mul[a][b] not in P or a in P or b in P for a in range(n) for b in range(n))


def brute_s_spectrum(R, S: frozenset, candidates=None) -> set[frozenset]:
    """S-primes among ``candidates`` (default: the full subset scan)."""
    cands = brute_ideals(R) if candidates is None else candidates
    return {P for P in cands if is_s_prime(R, S, P)}


def classical_spectrum(R, candidates=None) -> set[frozenset]:
    cands = brute_ideals(R) if candidates is None else candidates
    return {P for P in cands if is_prime(R, P)}


def powers(R, a) -> list[int]:
    """a, a^2, ..., a^(n+1); long enough to reach the eventual cycle."""
    mul, _, n, _ = tables(R)
    out = [a]
    for _ in range(n):
        out.append(mul[out[-1]][a])
    return out


def classical_radical(R, I: frozenset) -> frozenset:
    return frozenset(a for a in range(R.size) if any(x in I for x in powers(R, a)))


def brute_s_radical(R, S: frozenset, I: frozenset) -> frozenset:
    mul = tables(R)[0]
    return frozenset(a for a in range(R.size)
                     if any(mul[s][x] in I for s in S for x in powers(R, a)))


def generated_topology(points: list, subbasis: list[frozenset]) -> set[frozenset]:
    """Close ``subbasis`` plus the full set under pairwise intersection, then
    close the result (with the empty set) under pairwise union."""
    full = frozenset(points)
    basis = {frozenset(x) for x in subbasis} | {full}
    while True:
        new = {a & b for a in basis for b in basis} - basis
        if not new:
            break
        basis |= new
    opens = {frozenset()} | basis
    while True:
        new = {a | b for a in opens for b in opens} - opens
        if not new:
            return opens
        opens |= new


def classical_zariski_closed(R, primes: list[frozenset], ideals=None) -> set[frozenset]:
    ideals = brute_ideals(R) if ideals is None else ideals
    return {frozenset(P for P in primes if I <= P) for I in ideals}


def classical_flat_opens(R, primes: list[frozenset]) -> set[frozenset]:
    sub = [frozenset(P for P in primes if f in P) for f in range(R.size)]
    return generated_topology(primes, sub)


def brute_morphisms(R1, R2) -> list[tuple[int, ...]]:
    m1, a1, n1, one1 = tables(R1)
    m2, a2, n2, one2 = tables(R2)
    out = []
    for f in product(range(n2), repeat=n1):
        if f[one1] != one2:
            continue
        if all(f[a1[a][b]] == a2[f[a]][f[b]] and f[m1[a][b]] == m2[f[a]][f[b]]
               for a in range(n1) for b in range(n1)):
            out.append(f)
    return sorted(out)


def going_down_fails(R1, R2, phi, S: frozenset) -> set[tuple]:
    """Failing (p_low, p_high, q_high) triples under containment order."""
    T = frozenset(phi[s] for s in S)
    spec1 = brute_s_spectrum(R1, S)
    spec2 = brute_s_spectrum(R2, T)
    pre = {Q: frozenset(a for a in range(R1.size) if phi[a] in Q) for Q in spec2}
    fails = set()
    for qh in spec2:
        ph = pre[qh]
        for pl in spec1:
            if pl <= ph and not any(ql <= qh and pre[ql] == pl for ql in spec2):
                fails.add((pl, ph, qh))
    return fails
