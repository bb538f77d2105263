"""Dense univariate polynomials over a field, as tuples (constant term first).

The zero polynomial is the empty tuple. Coefficients are any field elements
supporting ``+ - * /`` and truthiness; nothing here knows which field.
"""


def trim(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return tuple(p[:n])


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return trim(out)


def sub(p, q):
    out = list(p) + [None] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = -c if out[i] is None else out[i] - c
    return trim(out)


def neg(p):
    return tuple(-c for c in p)


def scale(p, c):
    if not c:
        return ()
    return trim(tuple(a * c for a in p))


def mul(p, q):
    if not p or not q:
        return ()
    if len(p) == 1:
        return scale(q, p[0])
    if len(q) == 1:
        return scale(p, q[0])
    out = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if not b:
                continue
            v = a * b
            k = i + j
            out[k] = v if out[k] is None else out[k] + v
    zero = p[0] - p[0]
    return trim([zero if c is None else c for c in out])


def divmod_(p, q):
    """Quotient and remainder; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (), trim(p)
    r = list(p)
    inv_lead = 1 / q[-1]
    quot = [None] * (len(p) - dq)
    for i in range(len(p) - 1 - dq, -1, -1):
        c = r[i + dq]
        if c:
            c = c * inv_lead
            for k in range(dq):
                if q[k]:
                    r[i + k] = r[i + k] - c * q[k]
            r[i + dq] = c - c  # exact zero of the right type
        quot[i] = c
    return trim(quot), trim(r[:dq])


def monic(p):
    if not p or p[-1] == 1:
        return p
    inv = 1 / p[-1]
    return tuple(c * inv for c in p[:-1]) + (p[-1] * inv,)


def gcd(p, q):
    """Monic gcd (the zero polynomial if both are zero)."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def xgcd(p, q, one):
    """Return (g, s, u) with s*p + u*q = g monic."""
    r0, r1 = p, q
    s0, s1 = (one,), ()
    u0, u1 = (), (one,)
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        u0, u1 = u1, sub(u0, mul(quo, u1))
    lead = r0[-1]
    inv = 1 / lead
    return scale(r0, inv), scale(s0, inv), scale(u0, inv)


def order_at_zero(p):
    """Multiplicity of the root 0 (None for the zero polynomial)."""
    for i, c in enumerate(p):
        if c:
            return i
    return None


def evaluate(p, x, zero):
    acc = zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim(tuple(c * i for i, c in enumerate(p))[1:])
