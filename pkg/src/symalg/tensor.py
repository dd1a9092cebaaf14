"""Free tensor super algebra with exact rational coefficients.

Everything downstream (relations, quotient engines, resolutions, the orbit
pipeline) is phrased in terms of three pieces of data defined here:

* an alphabet of weighted, parity-graded generators,
* words = finite sequences of generators, ordered by weight then
  right-to-left lexicographically (so coset representatives chosen against
  ascending columns reproduce the classical rewriting bases, e.g.
  ``z1^a z2^b`` for the two-odd-generator quotient),
* polynomials = finite rational combinations of words.

Signs follow the Koszul rule throughout: swapping homogeneous factors of
parities p, q costs (-1)**(p*q).
"""

from fractions import Fraction

EVEN = 0
ODD = 1

Rat = Fraction


class Generator:
    __slots__ = ("index", "name", "parity", "weight")

    def __init__(self, index, name, parity, weight):
        self.index = index
        self.name = name
        self.parity = parity
        self.weight = weight

    def __repr__(self):
        return f"Generator({self.name!r}, parity={self.parity}, weight={self.weight})"


class Alphabet:
    """Ordered list of generators; the order drives the monomial order.

    Words of equal weight are compared by reading letters right to left
    (graded colexicographic order).
    """

    def __init__(self, generators):
        self.generators = []
        seen = set()
        for i, (name, parity, weight) in enumerate(generators):
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            if parity not in (EVEN, ODD):
                raise ValueError(f"parity must be 0 or 1, got {parity!r}")
            if weight <= 0 or weight != int(weight):
                raise ValueError(f"weight must be a positive integer, got {weight!r}")
            seen.add(name)
            self.generators.append(Generator(i, name, parity, weight))
        self.parities = tuple(g.parity for g in self.generators)
        self.weights = tuple(g.weight for g in self.generators)
        self.names = tuple(g.name for g in self.generators)
        self._words = {}

    def __len__(self):
        return len(self.generators)

    def index(self, name):
        return self.names.index(name)

    def word_weight(self, word):
        w = self.weights
        return sum(w[i] for i in word)

    def word_parity(self, word):
        p = self.parities
        return sum(p[i] for i in word) & 1

    def word_name(self, word):
        return "*".join(self.names[i] for i in word) if word else "1"

    def words_of_weight(self, w):
        """All words of total weight w, in ascending monomial order."""
        if w in self._words:
            return self._words[w]
        if w < 0:
            out = []
        elif w == 0:
            out = [()]
        else:
            # Building by appended last letter keeps colex order: the last
            # letter is the primary tiebreaker within a weight.
            out = []
            for g in self.generators:
                for u in self.words_of_weight(w - g.weight):
                    out.append(u + (g.index,))
        self._words[w] = out
        return out

    def word_index(self, w):
        key = ("idx", w)
        if key in self._words:
            return self._words[key]
        idx = {u: i for i, u in enumerate(self.words_of_weight(w))}
        self._words[key] = idx
        return idx

    def poly(self, terms=()):
        return Poly(self, dict(terms))

    def gen(self, name):
        return Poly(self, {(self.index(name),): Fraction(1)})

    def unit(self):
        return Poly(self, {(): Fraction(1)})

    def zero(self):
        return Poly(self, {})


def sym_alphabet(n, s):
    """n even generators x1..xn of weight 2, s odd generators z1..zs of weight 3."""
    gens = [(f"x{i}", EVEN, 2) for i in range(1, n + 1)]
    gens += [(f"z{a}", ODD, 3) for a in range(1, s + 1)]
    return Alphabet(gens)


class Poly:
    """Rational combination of tensor words over a fixed alphabet.

    Zero coefficients are never stored.  Addition, scaling, concatenation
    product and the graded bracket are the only primitives; all higher
    operations reduce to these.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms):
        self.alphabet = alphabet
        self.terms = terms

    # -- construction helpers

    def copy(self):
        return Poly(self.alphabet, dict(self.terms))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- gradings

    def weight(self):
        """Common weight of all words; None for 0, error if inhomogeneous."""
        ws = {self.alphabet.word_weight(u) for u in self.terms}
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError(f"inhomogeneous weights {sorted(ws)}")
        return ws.pop()

    def parity(self):
        """Common parity of all words; None for 0, error if mixed."""
        ps = {self.alphabet.word_parity(u) for u in self.terms}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError("polynomial of mixed parity")
        return ps.pop()

    def is_homogeneous(self):
        try:
            self.weight()
            self.parity()
        except ValueError:
            return False
        return True

    def weight_parts(self):
        parts = {}
        for u, c in self.terms.items():
            w = self.alphabet.word_weight(u)
            parts.setdefault(w, {})[u] = c
        return {w: Poly(self.alphabet, t) for w, t in sorted(parts.items())}

    # -- arithmetic

    def __add__(self, other):
        out = dict(self.terms)
        for u, c in other.terms.items():
            v = out.get(u, 0) + c
            if v:
                out[u] = v
            else:
                out.pop(u, None)
        return Poly(self.alphabet, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for u, c in other.terms.items():
            v = out.get(u, 0) - c
            if v:
                out[u] = v
            else:
                out.pop(u, None)
        return Poly(self.alphabet, out)

    def __neg__(self):
        return Poly(self.alphabet, {u: -c for u, c in self.terms.items()})

    def scale(self, k):
        k = Fraction(k)
        if not k:
            return Poly(self.alphabet, {})
        return Poly(self.alphabet, {u: c * k for u, c in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product (no sign: words are plain tensors)."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                c = out.get(w, 0) + cu * cv
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
        return Poly(self.alphabet, out)

    def __rmul__(self, k):
        return self.scale(k)

    def sorted_terms(self):
        alph = self.alphabet
        return sorted(
            self.terms.items(),
            key=lambda it: (alph.word_weight(it[0]), tuple(reversed(it[0]))),
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for u, c in self.sorted_terms():
            name = self.alphabet.word_name(u)
            if c == 1 and u:
                bits.append(name)
            elif u:
                bits.append(f"{c}*{name}")
            else:
                bits.append(str(c))
        return " + ".join(bits).replace("+ -", "- ")


def super_commutator(u, v):
    """u v - (-1)**(|u||v|) v u for parity-homogeneous u, v."""
    pu = u.parity()
    pv = v.parity()
    if pu is None or pv is None:
        return u.alphabet.zero()
    sign = -1 if (pu and pv) else 1
    return u * v - (v * u).scale(sign)


def lie_expand(expr, alphabet):
    """Expand a bracket tree into the tensor algebra.

    A tree is a generator name, or a pair (left, right) meaning the graded
    bracket of the two subtrees.
    """
    if isinstance(expr, str):
        return alphabet.gen(expr)
    if isinstance(expr, Poly):
        return expr
    if isinstance(expr, (tuple, list)) and len(expr) == 2:
        return super_commutator(
            lie_expand(expr[0], alphabet), lie_expand(expr[1], alphabet)
        )
    raise ValueError(f"malformed bracket tree {expr!r}")


def bracket_word_name(expr):
    if isinstance(expr, str):
        return expr
    return "[%s,%s]" % (bracket_word_name(expr[0]), bracket_word_name(expr[1]))


def cyclic_derivative(p, gen_name):
    """Signed rotation-sum derivative of a class in TV/[TV,TV].

    For a word v1..vr and a generator v, sum over positions i with vi = v of
    (-1)**((|vi|+..+|vr|) * (|v1|+..+|v_{i-1}|)) v_{i+1}..vr v1..v_{i-1}.
    """
    alph = p.alphabet
    g = alph.index(gen_name)
    par = alph.parities
    out = alph.zero()
    acc = out.terms
    for u, c in p.terms.items():
        r = len(u)
        pre = 0  # parity of v1..v_{i-1}
        tot = sum(par[i] for i in u) & 1
        for i, letter in enumerate(u):
            if letter == g:
                suf = (tot - pre) & 1  # parity of vi..vr
                sign = -1 if (suf and pre) else 1
                w = u[i + 1 :] + u[:i]
                val = acc.get(w, 0) + sign * c
                if val:
                    acc[w] = val
                else:
                    acc.pop(w, None)
            pre = (pre + par[letter]) & 1
    return out


class Derivation:
    """Homogeneous derivation of the tensor algebra, given on generators.

    Satisfies d(uv) = d(u) v + (-1)**(|d||u|) u d(v).
    """

    __slots__ = ("alphabet", "parity", "weight_step", "images")

    def __init__(self, alphabet, images, parity):
        self.alphabet = alphabet
        self.parity = parity
        imgs = {}
        step = None
        for name, val in images.items():
            i = alphabet.index(name)
            if val.is_zero():
                imgs[i] = val
                continue
            if val.parity() != (alphabet.parities[i] + parity) % 2:
                raise ValueError(f"image of {name} has wrong parity")
            st = val.weight() - alphabet.weights[i]
            if step is None:
                step = st
            elif st != step:
                raise ValueError("images not of a single homogeneous degree")
            imgs[i] = val
        for g in alphabet.generators:
            imgs.setdefault(g.index, alphabet.zero())
        self.images = imgs
        self.weight_step = step

    def __call__(self, p):
        alph = self.alphabet
        par = alph.parities
        out = alph.zero()
        for u, c in p.terms.items():
            left_par = 0
            for i, letter in enumerate(u):
                img = self.images[letter]
                if img:
                    sign = -1 if (self.parity and left_par) else 1
                    head = Poly(alph, {u[:i]: Fraction(sign) * c})
                    tail = Poly(alph, {u[i + 1 :]: Fraction(1)})
                    out = out + head * img * tail
                left_par = (left_par + par[letter]) & 1
        return out


def extend_derivation(alphabet, images, target_parity):
    """Build the derivation with the given generator images.

    Images must shift parity by target_parity and weight by a single
    common amount.
    """
    return Derivation(alphabet, images, target_parity)


def random_poly(alphabet, weight, rng, terms=3, scale=4):
    """Random homogeneous-weight polynomial (test helper)."""
    words = alphabet.words_of_weight(weight)
    if not words:
        return alphabet.zero()
    out = {}
    for _ in range(terms):
        u = words[rng.randrange(len(words))]
        c = Fraction(rng.randint(-scale, scale))
        if c:
            out[u] = out.get(u, Fraction(0)) + c
    return Poly(alphabet, {u: c for u, c in out.items() if c})
