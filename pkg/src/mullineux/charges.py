"""Multicharges and the extended affine symmetric group acting on them.

A multicharge is a tuple s = (s_1, ..., s_l) of integers.  For a fixed
modulus e the group acting on charges is generated by

* sigma_c, 1 <= c <= l-1: swap entries c and c+1;
* z_i, 1 <= i <= l: add e to entry i;
* tau = z_l sigma_{l-1} ... sigma_1: rotate left and add e to the entry
  that wraps around, tau.s = (s_2, ..., s_l, s_1 + e).

Words are lists of generators ("sigma", c), ("tau",), ("tau_inv",) applied
left to right.  The fundamental domain consists of the charges with
s_1 <= s_2 <= ... <= s_l < s_1 + e.
"""

import operator

from .errors import InputError, InternalError, NoPathError


def check_charge(s):
    """Normalize to a tuple of ints; must be nonempty."""
    if isinstance(s, str):
        raise InputError(f"a multicharge must be a sequence of ints, got {s!r}")
    try:
        t = tuple(operator.index(x) for x in s)
    except TypeError as exc:
        raise InputError(f"charge entries must be ints: {tuple(s)!r}") from exc
    if not t:
        raise InputError("a multicharge needs at least one entry")
    return t


def act_sigma(s, c):
    """Swap entries c and c+1 (1-based); requires 1 <= c < len(s)."""
    if not 1 <= c < len(s):
        raise InputError(f"sigma index {c} out of range for level {len(s)}")
    t = list(s)
    t[c - 1], t[c] = t[c], t[c - 1]
    return tuple(t)


def act_shift(s, i, e):
    """Add e to entry i (1-based)."""
    if not 1 <= i <= len(s):
        raise InputError(f"shift index {i} out of range for level {len(s)}")
    t = list(s)
    t[i - 1] += e
    return tuple(t)


def act_tau(s, e):
    """Rotate left, adding e to the entry that wraps: (s_2,...,s_l,s_1+e)."""
    return tuple(s[1:]) + (s[0] + e,)


def act_tau_inv(s, e):
    """Inverse of act_tau: (s_l - e, s_1, ..., s_{l-1})."""
    return (s[-1] - e,) + tuple(s[:-1])


def apply_generator(s, gen, e):
    """Apply a single generator ("sigma", c) / ("tau",) / ("tau_inv",)."""
    if gen[0] == "sigma":
        return act_sigma(s, gen[1])
    if gen[0] == "tau":
        return act_tau(s, e)
    if gen[0] == "tau_inv":
        return act_tau_inv(s, e)
    raise InputError(f"unknown generator {gen!r}")


def apply_word(s, word, e):
    """Apply a word of generators left to right."""
    t = tuple(s)
    for gen in word:
        t = apply_generator(t, gen, e)
    return t


def inverse_word(word):
    """Inverse word: reversed, with sigma self-inverse and tau <-> tau_inv."""
    flip = {"tau": ("tau",), "tau_inv": ("tau",)}
    out = []
    for gen in reversed(word):
        if gen[0] == "sigma":
            out.append(gen)
        elif gen[0] == "tau":
            out.append(("tau_inv",))
        elif gen[0] == "tau_inv":
            out.append(("tau",))
        else:
            raise InputError(f"unknown generator {gen!r}")
    return out


def is_fundamental(s, e):
    """True when s_1 <= ... <= s_l < s_1 + e."""
    return all(a <= b for a, b in zip(s, s[1:])) and s[-1] < s[0] + e


def is_very_dominant(s, n):
    """True when consecutive gaps all exceed n - 1."""
    return all(b - a > n - 1 for a, b in zip(s, s[1:]))


def residue_counts(s, e):
    """How many entries of s fall in each residue class mod e."""
    counts = [0] * e
    for x in s:
        counts[x % e] += 1
    return tuple(counts)


def same_orbit(s, t, e):
    """Two charges lie in one orbit iff their residue multisets mod e agree."""
    return len(s) == len(t) and residue_counts(s, e) == residue_counts(t, e)


def contains(s, t, e):
    """Componentwise residue-count comparison: every class of s fits in t."""
    cs = residue_counts(s, e)
    ct = residue_counts(t, e)
    return all(a <= b for a, b in zip(cs, ct))


def fundamental_representative(s, e):
    """The fundamental charge with the same residues, anchored at min(s)."""
    m = min(s)
    return tuple(sorted(m + ((x - m) % e) for x in s))


def normalization_word(s, e):
    """A word taking s to fundamental_representative(s, e).

    Alternates stable adjacent-swap sorting (strict swaps only) with tau_inv
    whenever the sorted charge still spans e or more.  The minimum entry is
    invariant and the sum drops by e at each tau_inv, so this terminates.
    """
    t = list(s)
    word = []
    l = len(t)
    while True:
        swapped = True
        while swapped:
            swapped = False
            for c in range(l - 1):
                if t[c] > t[c + 1]:
                    word.append(("sigma", c + 1))
                    t[c], t[c + 1] = t[c + 1], t[c]
                    swapped = True
        if t[-1] < t[0] + e:
            return word
        word.append(("tau_inv",))
        t = [t[-1] - e] + t[:-1]


def path_word(s, t, e):
    """A word taking s to t; raises NoPathError when they are not in one orbit.

    Route: normalize s down to its fundamental representative, slide along
    the orbit of fundamental representatives by powers of tau, then run the
    normalization of t backwards.
    """
    s = check_charge(s)
    t = check_charge(t)
    if not same_orbit(s, t, e):
        raise NoPathError(f"{s} and {t} have different residue multisets mod {e}")
    ws = normalization_word(s, e)
    fs = apply_word(s, ws, e)
    wt = normalization_word(t, e)
    ft = apply_word(t, wt, e)
    diff = sum(ft) - sum(fs)
    if diff % e:
        raise InternalError(f"fundamental representatives {fs}, {ft} differ off-lattice")
    j = diff // e
    bridge = [("tau",)] * j if j >= 0 else [("tau_inv",)] * (-j)
    word = ws + bridge + inverse_word(wt)
    if apply_word(s, word, e) != t:
        raise InternalError(f"path from {s} to {t} missed its target")
    return word


def transpose_charge(s):
    """(-s_l, ..., -s_1); fundamental whenever s is."""
    return tuple(-x for x in reversed(s))


def sharp_very_dominant(s, n, e):
    """The canonical very dominant charge with entries == -s_i mod e.

    Entry 1 is the representative of -s_1 in {0..e-1}; each later entry is
    the least value >= previous + n in the class of -s_{i+1}.
    """
    s = check_charge(s)
    out = [(-s[0]) % e]
    for i in range(1, len(s)):
        base = out[-1] + n
        delta = (-s[i] - base) % e
        out.append(base + delta)
    return tuple(out)


def very_dominant_representative(s, n, e):
    """A very dominant charge in the orbit of s, built above F(s).

    Keeps entry 1 of the fundamental representative and pushes each later
    entry up by multiples of e until the gap exceeds n - 1.
    """
    s = check_charge(s)
    f = fundamental_representative(s, e)
    out = [f[0]]
    for i in range(1, len(f)):
        gap = n + ((f[i] - f[i - 1] - n) % e)
        out.append(out[-1] + gap)
    return tuple(out)
