"""Shared plain-text word syntax.

Letters are whitespace separated.  ``g`` is a generator, ``g^-1`` its
inverse and ``g^k`` an integer power.  A parenthesised group may carry a
power, ``(a1 a2)^6``, and a bare trailing ``^k`` token raises everything to
its left to the ``k``-th power, so ``a2 a4 ^6`` means ``(a2 a4)^6``.  The
empty string is the identity.
"""

import re

_TOKEN = re.compile(r"\(|\)(?:\^(-?\d+))?|\^(-?\d+)|[^\s()^]+(?:\^(-?\d+))?")


class WordSyntaxError(ValueError):
    pass


def _power(seq, k):
    if k >= 0:
        return seq * k
    inv = [(name, -e) for name, e in reversed(seq)]
    return inv * (-k)


def parse_letters(text):
    """Parse ``text`` into a flat list of ``(name, +1 | -1)`` letters.

    No free reduction is done here.
    """
    stack = [[]]
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"cannot parse {text!r} at column {pos}")
        tok = m.group(0)
        pos = m.end()
        if tok == "(":
            stack.append([])
        elif tok.startswith(")"):
            if len(stack) == 1:
                raise WordSyntaxError(f"unbalanced ')' in {text!r}")
            group = stack.pop()
            k = int(m.group(1)) if m.group(1) is not None else 1
            stack[-1].extend(_power(group, k))
        elif tok.startswith("^"):
            k = int(m.group(2))
            stack[-1] = _power(stack[-1], k)
        else:
            name, _, exp = tok.partition("^")
            k = int(exp) if exp else 1
            stack[-1].extend(_power([(name, 1)], k))
    if len(stack) != 1:
        raise WordSyntaxError(f"unbalanced '(' in {text!r}")
    return stack[0]


def format_letters(letters):
    return " ".join(name if e == 1 else f"{name}^-1" for name, e in letters)
