"""Pure-Python enumeration and summation kernels (fallback backend)."""
from math import gcd


def box_product(lo, hi):
    """All integer tuples v with lo[i] <= v[i] <= hi[i], odometer order."""
    n = len(lo)
    if any(a > b for a, b in zip(lo, hi)):
        return []
    if n == 0:
        return [()]
    cur = list(lo)
    out = []
    while True:
        out.append(tuple(cur))
        i = n - 1
        while i >= 0 and cur[i] == hi[i]:
            cur[i] = lo[i]
            i -= 1
        if i < 0:
            return out
        cur[i] += 1


def _trim(parts):
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return tuple(parts[:end])


def strip_chains(shape, n):
    """Chains () = l0 < l1 < ... < ln = shape of horizontal strips, sorted."""
    shape = _trim(tuple(shape))
    if len(shape) > n:
        return []
    out = []
    chain = [None] * (n + 1)
    chain[n] = shape

    def descend(k):
        cur = chain[k]
        if k == 0:
            if not cur:
                out.append(tuple(chain))
            return
        length = len(cur)
        lo = [cur[i + 1] if i + 1 < length else 0 for i in range(length)]
        for nu in box_product(lo, list(cur)):
            nu = _trim(nu)
            # k-1 strips cannot build more than k-1 rows
            if len(nu) > k - 1:
                continue
            chain[k - 1] = nu
            descend(k - 1)

    descend(n)
    out.sort()
    return out


def chain_filling(chain):
    """Row-major entries of the reversed tableau encoded by a strip chain."""
    n = len(chain) - 1
    shape = chain[n]
    entries = []
    for i, row in enumerate(shape):
        for j in range(row):
            for k in range(1, n + 1):
                level = chain[k]
                if i < len(level) and level[i] > j:
                    entries.append(n - k + 1)
                    break
    return tuple(entries)


def weighted_product_sum(fillings, wnum, wden, tnum, tden):
    """sum_T w_T prod_c table[c][T_c - 1] as an unnormalized (num, den) pair."""
    snum, sden = 0, 1
    for idx, filling in enumerate(fillings):
        pn = wnum[idx]
        pd = wden[idx]
        if pn == 0:
            continue
        for c, v in enumerate(filling):
            pn *= tnum[c][v - 1]
            if pn == 0:
                break
            pd *= tden[c][v - 1]
        if pn == 0:
            continue
        g = gcd(sden, pd)
        snum = snum * (pd // g) + pn * (sden // g)
        sden = sden * (pd // g)
    return snum, sden
