"""Symmetric pairs (g, h) with simple g admitting proper SL(2,R) actions:
the published classification table (with its four corrections applied) as
static data, plus parameterized lookup."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

Summand = tuple[str, tuple[int, ...], Optional[str]]  # (head, args, field)

_SUMMAND_RE = re.compile(r"^\s*(e6|e7|e8|f4|g2|sl|su\*|su|so\*|so|sp)\s*(C)?\s*(?:\(([^()]*)\))?\s*$")


def parse_summand(text: str) -> Summand:
    """Parse one algebra symbol such as sp(2,1), sl(4,R), so(5,C), su*(6), e6(-14) or e6C."""
    m = _SUMMAND_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse algebra symbol {text!r}")
    head, complex_mark, body = m.group(1), m.group(2), m.group(3)
    field = "C" if complex_mark else None
    args: list[int] = []
    if body is not None:
        for piece in body.split(","):
            piece = piece.strip()
            if piece == "R":
                field = "R"
            elif piece == "C":
                field = "C"
            else:
                args.append(int(piece))
    return head, tuple(args), field


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*([a-z]?)")


def _expr_terms(expr: str) -> list[tuple[int, str]]:
    """Linear expression like '4m-4i+2' as (coefficient, variable|'') terms."""
    terms = []
    for sign, num, var in _TERM_RE.findall(expr.replace(" ", "")):
        if not num and not var:
            continue
        coeff = int(num) if num else 1
        if sign == "-":
            coeff = -coeff
        terms.append((coeff, var))
    return terms


def _eval_expr(expr: str, env: dict[str, int]) -> Optional[int]:
    total = 0
    for coeff, var in _expr_terms(expr):
        if var:
            if var not in env:
                return None
            total += coeff * env[var]
        else:
            total += coeff
    return total


def _bind_expr(expr: str, value: int, env: dict[str, int]) -> Optional[dict[str, int]]:
    """Extend env so that expr == value, if a single unknown makes it solvable."""
    unknowns = [(c, v) for c, v in _expr_terms(expr) if v and v not in env]
    if not unknowns:
        return env if _eval_expr(expr, env) == value else None
    if len(unknowns) > 1 or unknowns[0][0] == 0:
        return None
    coeff, var = unknowns[0]
    rest = value - sum(c * (env[v] if v else 1) for c, v in _expr_terms(expr) if v != var)
    if rest % coeff:
        return None
    out = dict(env)
    out[var] = rest // coeff
    return out


_DOMAINS = {"k": 1, "m": 1, "n": 2, "p": 1, "q": 1, "i": 0, "j": 0}


@dataclass(frozen=True)
class SymmetricPairEntry:
    """One row of the classification table, with free integer parameters."""

    g: str
    h: tuple[str, ...]
    condition: str  # human-readable side condition ('' when none)

    def h_display(self) -> str:
        return " + ".join(self.h)

    def to_json(self) -> dict:
        return {"g": self.g, "h": self.h_display(), "condition": self.condition}


def _pattern_pieces(pattern: str) -> tuple[str, tuple[str, ...], Optional[str]]:
    m = re.match(r"^(e6|e7|e8|f4|g2|sl|su\*|su|so\*|so|sp)(C)?(?:\(([^()]*)\))?$", pattern.replace(" ", ""))
    head, cmark, body = m.group(1), m.group(2), m.group(3)
    field = "C" if cmark else None
    exprs: list[str] = []
    if body:
        for piece in body.split(","):
            if piece == "R":
                field = "R"
            elif piece == "C":
                field = "C"
            else:
                exprs.append(piece)
    return head, tuple(exprs), field


def _match_summand(pattern: str, concrete: Summand, env: dict[str, int]) -> list[dict[str, int]]:
    head, exprs, field = _pattern_pieces(pattern)
    chead, cargs, cfield = concrete
    if head != chead or field != cfield or len(exprs) != len(cargs):
        return []
    orders = [cargs]
    if len(cargs) == 2 and cargs[0] != cargs[1]:
        orders.append((cargs[1], cargs[0]))
    results = []
    for args in orders:
        cur: Optional[dict[str, int]] = dict(env)
        pending = list(zip(exprs, args))
        progress = True
        while cur is not None and pending and progress:
            progress = False
            rest = []
            for expr, val in pending:
                ext = _bind_expr(expr, val, cur)
                if ext is not None:
                    cur = ext
                    progress = True
                elif _eval_expr(expr, cur) is None:
                    rest.append((expr, val))
                else:
                    cur = None
                    break
            pending = rest
        if cur is not None and not pending:
            results.append(cur)
    return results


def _domains_ok(env: dict[str, int]) -> bool:
    return all(env[v] >= _DOMAINS[v] for v in env)


def _mins(env, a, b, c, d):
    return min(env[a], env[b]) > min(env[c], env[d]) + min(env[a] - env[c], env[b] - env[d])


_Check = Callable[[dict[str, int]], bool]


def _always(env) -> bool:
    return True


# (g pattern, h summand patterns, condition text, condition check)
_ROWS: list[tuple[str, tuple[str, ...], str, _Check]] = [
    ("sl(2k,R)", ("sl(k,C)", "so(2)"), "", _always),
    ("sl(n,R)", ("so(n-i,i)",), "2i < n-1", lambda e: 2 * e["i"] < e["n"] - 1),
    ("su*(2k)", ("sp(k-i,i)",), "2i < k-1", lambda e: 2 * e["i"] < e["k"] - 1),
    ("su(2p,2q)", ("sp(p,q)",), "", _always),
    ("su(n,n)", ("so*(2n)",), "", _always),
    (
        "su(p,q)",
        ("su(i,j)", "su(p-i,q-j)", "so(2)"),
        "min{p,q} > min{i,j} + min{p-i,q-j}",
        lambda e: 0 <= e["i"] <= e["p"] and 0 <= e["j"] <= e["q"] and _mins(e, "p", "q", "i", "j"),
    ),
    (
        "so(p,q)",
        ("so(i,j)", "so(p-i,q-j)"),
        "p+q odd; min{p,q} > min{i,j} + min{p-i,q-j}",
        lambda e: (e["p"] + e["q"]) % 2 == 1
        and e["p"] + e["q"] >= 3
        and 0 <= e["i"] <= e["p"]
        and 0 <= e["j"] <= e["q"]
        and _mins(e, "p", "q", "i", "j"),
    ),
    ("sp(n,R)", ("su(n-i,i)", "so(2)"), "", lambda e: e["i"] <= e["n"]),
    ("sp(2k,R)", ("sp(k,C)",), "", _always),
    (
        "sp(p,q)",
        ("sp(i,j)", "sp(p-i,q-j)"),
        "min{p,q} > min{i,j} + min{p-i,q-j}",
        lambda e: 0 <= e["i"] <= e["p"] and 0 <= e["j"] <= e["q"] and _mins(e, "p", "q", "i", "j"),
    ),
    (
        "so(p,q)",
        ("so(i,j)", "so(p-i,q-j)"),
        "p+q even; min{p,q} > min{i,j} + min{p-i,q-j}, unless p = q = 2m+1 and |i-j| = 1",
        lambda e: (e["p"] + e["q"]) % 2 == 0
        and e["p"] + e["q"] >= 3
        and (e["p"], e["q"]) != (2, 2)
        and 0 <= e["i"] <= e["p"]
        and 0 <= e["j"] <= e["q"]
        and _mins(e, "p", "q", "i", "j")
        and not (e["p"] == e["q"] and e["p"] % 2 == 1 and e["p"] >= 3 and abs(e["i"] - e["j"]) == 1),
    ),
    ("so(2p,2q)", ("su(p,q)", "so(2)"), "", _always),
    ("so*(2k)", ("su(k-i,i)", "so(2)"), "2i < k-1", lambda e: 2 * e["i"] < e["k"] - 1),
    ("so(k,k)", ("so(k,C)", "so(2)"), "", _always),
    ("so*(4m)", ("so*(4m-4i+2)", "so*(4i-2)"), "", lambda e: 1 <= e["i"] <= e["m"]),
    ("e6(6)", ("sp(2,2)",), "", _always),
    ("e6(6)", ("su*(6)", "su(2)"), "", _always),
    ("e6(2)", ("so*(10)", "so(2)"), "", _always),
    ("e6(2)", ("su(4,2)", "su(2)"), "", _always),
    ("e6(2)", ("sp(3,1)",), "", _always),
    ("e6(-14)", ("f4(-20)",), "", _always),
    ("e7(7)", ("e6(2)", "so(2)"), "", _always),
    ("e7(7)", ("su(4,4)",), "", _always),
    ("e7(7)", ("so*(12)", "su(2)"), "", _always),
    ("e7(7)", ("su*(8)",), "", _always),
    ("e7(-5)", ("e6(-14)", "so(2)"), "", _always),
    ("e7(-5)", ("su(6,2)",), "", _always),
    ("e7(-25)", ("e6(-14)", "so(2)"), "", _always),
    ("e7(-25)", ("su(6,2)",), "", _always),
    ("e8(8)", ("e7(-5)", "su(2)"), "", _always),
    ("e8(8)", ("so*(16)",), "", _always),
    ("f4(4)", ("sp(2,1)", "su(2)"), "", _always),
    ("sl(2k,C)", ("su*(2k)",), "", _always),
    ("sl(n,C)", ("su(n-i,i)",), "2i < n-1", lambda e: 2 * e["i"] < e["n"] - 1),
    ("so(2k+1,C)", ("so(2k+1-i,i)",), "i < k", lambda e: e["i"] < e["k"]),
    ("sp(n,C)", ("sp(n-i,i)",), "", lambda e: e["i"] <= e["n"]),
    (
        "so(2k,C)",
        ("so(2k-i,i)",),
        "i < k, unless k = i+1 = 2m+1",
        lambda e: e["k"] >= 3 and e["i"] < e["k"] and not (e["k"] == e["i"] + 1 and e["k"] % 2 == 1),
    ),
    ("so(4m,C)", ("so(4m-2i+1,C)", "so(2i-1,C)"), "", lambda e: 1 <= e["i"] <= 2 * e["m"]),
    ("so(2k,C)", ("so*(2k)",), "", lambda e: e["k"] >= 3),
    ("e6C", ("e6(-14)",), "", _always),
    ("e6C", ("e6(-26)",), "", _always),
    ("e7C", ("e7(-5)",), "", _always),
    ("e7C", ("e7(-25)",), "", _always),
    ("e8C", ("e8(-24)",), "", _always),
    ("f4C", ("f4(-20)",), "", _always),
]


def proper_sl2_pairs() -> list[SymmetricPairEntry]:
    """The full corrected table of symmetric pairs admitting proper SL(2,R) actions."""
    return [SymmetricPairEntry(g, h, cond) for g, h, cond, _ in _ROWS]


def _match_row(row, g: Summand, h: list[Summand]) -> Optional[dict[str, int]]:
    g_pat, h_pats, _, check = row
    if len(h_pats) != len(h):
        return None
    for env0 in _match_summand(g_pat, g, {}):
        # try every assignment of concrete summands to h patterns
        def assign(pats, items, env):
            if not pats:
                yield env
                return
            for idx, item in enumerate(items):
                for env2 in _match_summand(pats[0], item, env):
                    yield from assign(pats[1:], items[:idx] + items[idx + 1 :], env2)

        for env in assign(list(h_pats), list(h), env0):
            if _domains_ok(env) and check(env):
                return env
    return None


def lookup_pair(g_label: str, h_description: str) -> Optional[tuple[SymmetricPairEntry, dict[str, int]]]:
    """Find the table row matching a concrete pair, with its parameter values.

    Returns None when no row matches or the row's side condition fails.
    """
    g = parse_summand(g_label)
    h = [parse_summand(piece) for piece in re.split(r"[+⊕]", h_description)]
    for row in _ROWS:
        env = _match_row(row, g, h)
        if env is not None:
            g_pat, h_pats, cond, _ = row
            return SymmetricPairEntry(g_pat, h_pats, cond), env
    return None


def pairs_for(g_label: str) -> list[SymmetricPairEntry]:
    """All rows whose g pattern can be instantiated to the given label."""
    g = parse_summand(g_label)
    out = []
    for row in _ROWS:
        g_pat = row[0]
        if _match_summand(g_pat, g, {}):
            out.append(SymmetricPairEntry(row[0], row[1], row[2]))
    return out


def table_csv() -> str:
    lines = ["g,h,condition"]
    for entry in proper_sl2_pairs():
        cond = entry.condition.replace('"', "'")
        lines.append(f'"{entry.g}","{entry.h_display()}","{cond}"')
    return "\n".join(lines) + "\n"
