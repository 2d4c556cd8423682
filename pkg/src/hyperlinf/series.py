"""Truncated integer power series as coefficient lists ``[c_0, ..., c_n]``."""

from __future__ import annotations

from math import comb
from typing import Sequence


def mul(a: Sequence[int], b: Sequence[int], max_degree: int) -> list[int]:
    """Cauchy product truncated at ``max_degree``."""
    out = [0] * (max_degree + 1)
    for i, x in enumerate(a[: max_degree + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: max_degree + 1 - i]):
            out[i + j] += x * y
    return out


def binomial_power(step: int, count: int, max_degree: int) -> list[int]:
    """``(1 + t^step)^count``."""
    out = [0] * (max_degree + 1)
    for j in range(count + 1):
        if j * step > max_degree:
            break
        out[j * step] += comb(count, j)
    return out


def geometric_power(step: int, count: int, max_degree: int) -> list[int]:
    """``(1 - t^step)^(-count)`` for ``step >= 1``."""
    if step < 1:
        raise ValueError("geometric series needs a positive step")
    out = [0] * (max_degree + 1)
    for j in range(max_degree // step + 1):
        out[j * step] = comb(count + j - 1, j) if count else int(j == 0)
    return out


def truncate(a: Sequence[int], max_degree: int) -> list[int]:
    return list(a[: max_degree + 1]) + [0] * max(0, max_degree + 1 - len(a))


def format_series(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text
