"""Independent root-system oracle in orthonormal coordinates.

Nothing here touches the package: roots are written down from the standard
epsilon-coordinate descriptions (E7 and E6 as centralisers inside E8), and
every count below is taken over all long roots, so it does not depend on a
choice of positive system.
"""

from fractions import Fraction
from itertools import combinations, product

H = Fraction(1, 2)


def _unit(n, i, s=1):
    v = [0] * n
    v[i] = s
    return tuple(v)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def ip(a, b):
    return sum(Fraction(x) * y for x, y in zip(a, b))


def type_a(n):
    m = n + 1
    return [tuple((1 if k == i else -1 if k == j else 0) for k in range(m))
            for i in range(m) for j in range(m) if i != j]


def type_b(n):
    out = [_add(_unit(n, i, s), _unit(n, j, t)) for i, j in combinations(range(n), 2) for s in (1, -1) for t in (1, -1)]
    return out + [_unit(n, i, s) for i in range(n) for s in (1, -1)]


def type_c(n):
    out = [_add(_unit(n, i, s), _unit(n, j, t)) for i, j in combinations(range(n), 2) for s in (1, -1) for t in (1, -1)]
    return out + [_unit(n, i, 2 * s) for i in range(n) for s in (1, -1)]


def type_d(n):
    return [_add(_unit(n, i, s), _unit(n, j, t)) for i, j in combinations(range(n), 2) for s in (1, -1) for t in (1, -1)]


def type_g2():
    # inside the sum-zero plane of R^3: short e_i - e_j, long +-(2e_i - e_j - e_k)
    short = type_a(2)
    long = []
    for i in range(3):
        v = tuple(2 if k == i else -1 for k in range(3))
        long += [v, tuple(-x for x in v)]
    return short + long


def type_f4():
    out = type_b(4)
    out += [tuple(s * H for s in signs) for signs in product((1, -1), repeat=4)]
    return out


def type_e8():
    out = type_d(8)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(s * H for s in signs))
    return out


def type_e7():
    e8 = type_e8()
    theta = (0,) * 6 + (1, 1)
    return [a for a in e8 if ip(a, theta) == 0]


def type_e6():
    e8 = type_e8()
    t1 = (0,) * 6 + (1, 1)
    t2 = (0,) * 5 + (1, -1, 0)
    return [a for a in e8 if ip(a, t1) == 0 and ip(a, t2) == 0]


ROOTS = {
    "A": type_a, "B": type_b, "C": type_c, "D": type_d,
    "G2": lambda n: type_g2(), "F4": lambda n: type_f4(),
    "E6": lambda n: type_e6(), "E7": lambda n: type_e7(), "E8": lambda n: type_e8(),
}


def roots(family, rank):
    return ROOTS[family](rank)


def level(g, a):
    return 2 * ip(g, a) / ip(g, g)


def long_length(rs):
    return max(ip(a, a) for a in rs)


def oracle_dims(family, rank):
    """dim M, dim N, dim H(p), dim K(p) and the intersection size, from long-root counts.

    Raises ValueError if a count depends on the long root (or pair) chosen.
    """
    rs = roots(family, rank)
    L = long_length(rs)
    longs = [a for a in rs if ip(a, a) == L]
    sig1 = {sum(1 for a in rs if level(b, a) == 1) for b in longs}
    sig0 = {sum(1 for a in rs if level(b, a) == 0) for b in longs}
    if len(sig1) != 1 or len(sig0) != 1:
        raise ValueError("level counts depend on beta")
    s1, s0 = sig1.pop(), sig0.pop()
    b = longs[0]
    deltas = [d for d in longs if level(b, d) == 1]
    both, hp, kp = set(), set(), set()
    for d in deltas:
        bd = tuple(x - y for x, y in zip(b, d))
        both.add(sum(1 for a in rs if level(b, a) == 1 and level(d, a) == 1))
        hp.add(sum(1 for a in rs if level(b, a) == 0 and level(bd, a) == 0))
        kp.add(sum(1 for a in rs if (level(b, a) == 0 or a == b or tuple(-x for x in a) == b)
                   and level(bd, a) % 2))
    if len(both) > 1 or len(hp) > 1 or len(kp) > 1:
        raise ValueError("counts depend on delta")
    r = rank
    dim_h = (r - 1) + s0  # a_beta plus one real plane per positive root of level 0
    out = {"sigma1": s1, "sigma0": s0, "n_deltas": len(deltas), "dim_M": 2 * s1}
    if not deltas:
        return out
    dim_hp = (r - 1) + hp.pop()
    out["both"] = both.pop()
    out["dim_N"] = 2 + 2 * out["both"]
    out["dim_Hp"] = dim_h - dim_hp
    out["dim_Kp"] = kp.pop()  # +-gamma both counted: two per positive root
    return out
