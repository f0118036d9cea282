"""Reference modular data embedded as exact symbolic strings.

Entries are written in a tiny expression language over ``z`` (a fixed
primitive root of unity whose order is part of each record) with integer
literals and + - * / ^ and parentheses; parsing produces exact CycNum.
The matrices are transcriptions of published tables and are deliberately
not recomputed here: they are the independent side of every cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycNum, root_of_unity


class RefParseError(ValueError):
    pass


def parse_cyclotomic(expr: str, order: int, conductor: int | None = None) -> CycNum:
    """Parse an expression over z = primitive root of unity of the given order."""
    n = conductor if conductor is not None else order
    if n % order:
        raise RefParseError("conductor must be a multiple of the root order")
    z = root_of_unity(order).embed(n) if n != order else root_of_unity(order)
    tokens = _tokenize(expr)
    value, pos = _parse_sum(tokens, 0, z, n)
    if pos != len(tokens):
        raise RefParseError(f"trailing tokens in {expr!r}")
    return value


def _tokenize(expr: str) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(expr):
        c = expr[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(expr) and expr[j].isdigit():
                j += 1
            out.append(expr[i:j])
            i = j
        elif c in "+-*/^()z":
            out.append(c)
            i += 1
        else:
            raise RefParseError(f"bad character {c!r} in {expr!r}")
    return out


def _parse_sum(tok, pos, z, n):
    value, pos = _parse_product(tok, pos, z, n)
    while pos < len(tok) and tok[pos] in "+-":
        op = tok[pos]
        rhs, pos = _parse_product(tok, pos + 1, z, n)
        value = value + rhs if op == "+" else value - rhs
    return value, pos


def _parse_product(tok, pos, z, n):
    value, pos = _parse_factor(tok, pos, z, n)
    while pos < len(tok) and tok[pos] in "*/":
        op = tok[pos]
        rhs, pos = _parse_factor(tok, pos + 1, z, n)
        value = value * rhs if op == "*" else value / rhs
    return value, pos


def _parse_factor(tok, pos, z, n):
    neg = False
    while pos < len(tok) and tok[pos] in "+-":
        if tok[pos] == "-":
            neg = not neg
        pos += 1
    value, pos = _parse_atom(tok, pos, z, n)
    if pos < len(tok) and tok[pos] == "^":
        if pos + 1 >= len(tok) or not tok[pos + 1].isdigit():
            raise RefParseError("exponent must be a nonnegative integer")
        value = value ** int(tok[pos + 1])
        pos += 2
    return (-value if neg else value), pos


def _parse_atom(tok, pos, z, n):
    if pos >= len(tok):
        raise RefParseError("unexpected end of expression")
    t = tok[pos]
    if t == "(":
        value, pos = _parse_sum(tok, pos + 1, z, n)
        if pos >= len(tok) or tok[pos] != ")":
            raise RefParseError("unbalanced parenthesis")
        return value, pos + 1
    if t == "z":
        return z, pos + 1
    if t.isdigit():
        return CycNum.from_rational(Fraction(int(t)), n), pos + 1
    raise RefParseError(f"unexpected token {t!r}")


# -- the embedded tables ----------------------------------------------------------

# size-3 cyclic datum (also the non-trivial G4 family up to sign conjugation)
CYCLIC_3 = {
    "order": 3,
    "scalar": "1/3",
    "s": [
        ["1-z", "1-z^2", "z-z^2"],
        ["1-z^2", "1-z", "z^2-z"],
        ["z-z^2", "z^2-z", "z-z^2"],
    ],
    "t": ["1", "1", "z^2"],
}

# G4 family as printed by the CHEVIE table (fourierMat and eigenvalues)
G4_FAMILY = {
    "order": 3,
    "scalar": "1",
    "s": [
        ["-2/3*z-1/3*z^2", "-1/3*z-2/3*z^2", "-1/3*z+1/3*z^2"],
        ["-1/3*z-2/3*z^2", "-2/3*z-1/3*z^2", "1/3*z-1/3*z^2"],
        ["-1/3*z+1/3*z^2", "1/3*z-1/3*z^2", "1/3*z-1/3*z^2"],
    ],
    "t": ["1", "1", "z^2"],
}

# G27: the size-6 family with N-modular datum; z is a primitive 5th root
G27_FAMILY = {
    "order": 5,
    "scalar": "1/10",
    "s": [
        ["-z^4+z^3+z^2-z", "-z^4+z^3+z^2-z", "2*(-z^4+z^3+z^2-z)",
         "2*(-z^4+z^3+z^2-z)", "-5", "-5"],
        ["-z^4+z^3+z^2-z", "-z^4+z^3+z^2-z", "2*(-z^4+z^3+z^2-z)",
         "2*(-z^4+z^3+z^2-z)", "5", "5"],
        ["2*(-z^4+z^3+z^2-z)", "2*(-z^4+z^3+z^2-z)", "2*(3*z^4+2*z^3+2*z^2+3*z)",
         "2*(-2*z^4-3*z^3-3*z^2-2*z)", "0", "0"],
        ["2*(-z^4+z^3+z^2-z)", "2*(-z^4+z^3+z^2-z)", "2*(-2*z^4-3*z^3-3*z^2-2*z)",
         "2*(3*z^4+2*z^3+2*z^2+3*z)", "0", "0"],
        ["-5", "5", "0", "0", "5", "-5"],
        ["-5", "5", "0", "0", "-5", "5"],
    ],
    "t": ["1", "1", "z^3", "z^2", "-1", "1"],
    # representative labels of the rank-2 subcategory, fundamental coordinates
    "label_order": [
        [[0, 0], [0, 0]],
        [[0, 2], [0, 2]],
        [[2, 0], [2, 0]],
        [[0, 1], [0, 1]],
        [[6, 1], [-4, 1]],
        [[6, 0], [-4, 0]],
    ],
    "gradings": [[0, 0], [5, 0]],  # fundamental coordinates: 0 and 5*w1
}

# G24: the size-7 family; z is a primitive 7th root, rt = sqrt(-7)
_G24_RT = "z+z^2-z^3+z^4-z^5-z^6"
G24_FAMILY = {
    "order": 7,
    "scalar": "1/14",
    "sqrt_minus_7": _G24_RT,
    "s": [
        [f"-({_G24_RT})", f"({_G24_RT})", "7", "7",
         f"-2*({_G24_RT})", f"-2*({_G24_RT})", f"-2*({_G24_RT})"],
        [f"({_G24_RT})", f"-({_G24_RT})", "7", "7",
         f"2*({_G24_RT})", f"2*({_G24_RT})", f"2*({_G24_RT})"],
        ["7", "7", "7", "-7", "0", "0", "0"],
        ["7", "7", "-7", "7", "0", "0", "0"],
        [f"-2*({_G24_RT})", f"2*({_G24_RT})", "0", "0",
         "2*z^6+4*z^4-4*z^3-2*z", "-4*z^6+2*z^5-2*z^2+4*z", "-4*z^5-2*z^4+2*z^3+4*z^2"],
        [f"-2*({_G24_RT})", f"2*({_G24_RT})", "0", "0",
         "-4*z^6+2*z^5-2*z^2+4*z", "-4*z^5-2*z^4+2*z^3+4*z^2", "2*z^6+4*z^4-4*z^3-2*z"],
        [f"-2*({_G24_RT})", f"2*({_G24_RT})", "0", "0",
         "-4*z^5-2*z^4+2*z^3+4*z^2", "2*z^6+4*z^4-4*z^3-2*z", "-4*z^6+2*z^5-2*z^2+4*z"],
    ],
    "t": ["1", "1", "1", "-1", "z^3", "z^5", "z^6"],
    "label_order": [
        [[0, 0, 0], [0, 0, 0]],
        [[14, 0, 0], [-14, 0, 0]],
        [[22, 0, 0], [-20, 0, 0]],
        [[22, 0, 1], [-20, 0, 1]],
        [[0, 0, 1], [0, 0, 1]],
        [[0, 1, 0], [0, 1, 0]],
        [[2, 0, 0], [2, 0, 0]],
    ],
    "gradings": [[0, 0, 0], [7, 0, 0], [14, 0, 0], [21, 0, 0]],
    "transparent_label": [[14, 0, 2], [-14, 0, 2]],
}

REFERENCES = {
    "cyclic_3": CYCLIC_3,
    "G4_family": G4_FAMILY,
    "G27_family": G27_FAMILY,
    "G24_family": G24_FAMILY,
}


def reference_matrices(name: str, conductor: int | None = None):
    """Parsed (S, T, scalar) for a named reference datum."""
    ref = REFERENCES[name]
    order = ref["order"]
    scalar = parse_cyclotomic(ref["scalar"], order, conductor)
    s = [[parse_cyclotomic(e, order, conductor) for e in row] for row in ref["s"]]
    t = [parse_cyclotomic(e, order, conductor) for e in ref["t"]]
    return s, t, scalar
