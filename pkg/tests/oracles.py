"""Independent reference computations used only by the tests.

These go through sympy (noncommutative symbols, symbolic determinants)
so they share no code with the package's own Magnus or Bareiss paths.
"""

import sympy as sp


def sympy_magnus(letters, degree):
    """Truncated Magnus expansion via sympy noncommutative algebra.

    Returns {tuple of indices: coefficient}, constant term included.
    """
    gens = sorted({i for i, _ in letters})
    X = {i: sp.Symbol(f"X{i}", commutative=False) for i in gens}
    t = sp.Symbol("t")  # grading parameter, commutative

    def trunc(expr):
        poly = sp.expand(expr)
        return sum(poly.coeff(t, d) * t ** d for d in range(degree + 1))

    total = sp.Integer(1)
    for i, p in letters:
        # (1 + tX)^p truncated, using the geometric series for p < 0
        base = 1 + t * X[i]
        if p > 0:
            f = base ** p
        else:
            inv = sum((-t * X[i]) ** k for k in range(degree + 1))
            f = inv ** (-p)
        total = trunc(total * trunc(f))
    total = sp.expand(total)
    out = {}
    for term in sp.Add.make_args(total):
        coeff, rest = term.as_coeff_Mul()
        mono = []
        for factor in sp.Mul.make_args(rest):
            if factor == t or factor == 1:
                continue
            base, exp = factor.as_base_exp()
            if base == t:
                continue
            mono.extend([int(base.name[1:])] * int(exp))
        key = tuple(mono)
        out[key] = out.get(key, 0) + int(coeff)
    return {k: v for k, v in out.items() if v}


def sympy_conway_in_s(rows):
    """det(s^-1 M - s M^T) as a sympy expression in s."""
    s = sp.Symbol("s")
    M = sp.Matrix(rows)
    if M.shape == (0, 0):
        return sp.Integer(1), s
    return sp.expand((M / s - s * M.T).det(method="berkowitz")), s


def z_poly_in_s(coeffs, s):
    """Evaluate sum c_e z^e at z = 1/s - s."""
    return sp.expand(sum(c * (1 / s - s) ** e for e, c in coeffs.items()))
