"""Words and finite presentations.

A word is a tuple of ``(generator index, sign)`` pairs with sign +1 or -1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field


class PresentationError(ValueError):
    pass


def free_reduce(word):
    out = []
    for g, s in word:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def cyclic_reduce(word):
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def invert(word):
    return tuple((g, -s) for g, s in reversed(word))


def canonical_cyclic(word):
    """Representative of a cyclically reduced word up to rotation and inversion."""
    w = cyclic_reduce(word)
    if not w:
        return w
    best = None
    for cand in (w, invert(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best


def exponent_sums(word, ngens):
    row = [0] * ngens
    for g, s in word:
        row[g] += s
    return row


def occurrences(word, g):
    return sum(1 for x, _ in word if x == g)


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group; relators are freely reduced and nonempty.

    ``relator_names`` is optional bookkeeping (e.g. ``r_F`` labels) and is
    kept aligned with ``relators``.
    """
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]
    relator_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("duplicate generator names")
        rels, names = [], []
        given = self.relator_names
        for i, r in enumerate(self.relators):
            r = free_reduce(tuple((int(g), int(s)) for g, s in r))
            for g, s in r:
                if not 0 <= g < len(gens) or s not in (1, -1):
                    raise PresentationError("bad letter %r in relator %d" % ((g, s), i))
            if r:
                rels.append(r)
                if given is not None:
                    names.append(given[i])
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "relator_names", tuple(names) if given is not None else None)

    @property
    def ngens(self):
        return len(self.generators)

    @property
    def nrels(self):
        return len(self.relators)

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def word_str(self, word):
        return " ".join(self.generators[g] + ("" if s > 0 else "^-1") for g, s in word)

    def __str__(self):
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return "< %s | %s >" % (", ".join(self.generators), rels)

    def to_text(self):
        lines = ["gens: " + ", ".join(self.generators)]
        for i, r in enumerate(self.relators):
            if self.relator_names is not None:
                lines.append("# " + self.relator_names[i])
            lines.append("rel: " + self.word_str(r))
        return "\n".join(lines) + "\n"


def substitute(word, g, replacement):
    """Replace every occurrence of generator ``g`` by ``replacement`` (a word)."""
    inv = invert(replacement)
    out = []
    for x, s in word:
        if x == g:
            out.extend(replacement if s > 0 else inv)
        else:
            out.append((x, s))
    return free_reduce(out)


def solve_for(word, g):
    """For a relator containing ``g`` exactly once, the word equal to ``g``."""
    pos = [i for i, (x, _) in enumerate(word) if x == g]
    if len(pos) != 1:
        raise PresentationError("generator occurs %d times in relator, need exactly once" % len(pos))
    i = pos[0]
    a, s, b = word[:i], word[i][1], word[i + 1:]
    # a g^s b = 1  =>  g^s = a^-1 b^-1
    sol = invert(a) + invert(b)
    return free_reduce(sol if s > 0 else invert(sol))


def _drop_generator(pres_gens, rels, g, names=None):
    gens = pres_gens[:g] + pres_gens[g + 1:]
    shift = lambda w: tuple((x - 1 if x > g else x, s) for x, s in w)
    return Presentation(gens, tuple(shift(r) for r in rels), names)


def tietze_eliminate(pres, g, r):
    """Remove generator ``g`` using relator ``r`` in which it occurs exactly once."""
    if not 0 <= g < pres.ngens:
        raise PresentationError("no generator %r" % (g,))
    if not 0 <= r < pres.nrels:
        raise PresentationError("no relator %r" % (r,))
    sol = solve_for(pres.relators[r], g)
    rels, names = [], []
    for i, w in enumerate(pres.relators):
        if i == r:
            continue
        rels.append(substitute(w, g, sol))
        if pres.relator_names is not None:
            names.append(pres.relator_names[i])
    return _drop_generator(pres.generators, rels, g, names if pres.relator_names is not None else None)


def kill_generator(pres, g):
    """Set generator ``g`` to the identity and remove it."""
    rels = [substitute(w, g, ()) for w in pres.relators]
    return _drop_generator(pres.generators, rels, g, pres.relator_names)


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def parse_presentation(text):
    """Parse the line format ``gens: a, b`` / ``rel: a b a^-1 b^-1`` / ``# comment``."""
    gens = None
    index = {}
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise PresentationError("line %d: second 'gens:' line" % lineno)
            names = [x.strip() for x in line[5:].split(",")]
            if names == [""]:
                names = []
            for nm in names:
                if not _NAME.match(nm):
                    raise PresentationError("line %d: bad generator name %r" % (lineno, nm))
            gens = names
            index = {nm: i for i, nm in enumerate(names)}
            if len(index) != len(names):
                raise PresentationError("line %d: duplicate generator name" % lineno)
        elif line.startswith("rel:"):
            if gens is None:
                raise PresentationError("line %d: 'rel:' before 'gens:'" % lineno)
            terms = line[4:].split()
            if not terms:
                raise PresentationError("line %d: empty relator" % lineno)
            word = []
            for t in terms:
                sign = 1
                if t.endswith("^-1"):
                    t, sign = t[:-3], -1
                if not _NAME.match(t):
                    raise PresentationError("line %d: bad term %r" % (lineno, t))
                if t not in index:
                    raise PresentationError("line %d: unknown generator %r" % (lineno, t))
                word.append((index[t], sign))
            rels.append(tuple(word))
        else:
            raise PresentationError("line %d: expected 'gens:', 'rel:' or '#'" % lineno)
    if gens is None:
        raise PresentationError("no 'gens:' line")
    return Presentation(tuple(gens), tuple(rels))
