"""Independent brute-force reimplementations used as test oracles.

Everything here is written from the combinatorial definitions, on
purpose sharing no code with the package: matching sums for the
Pfaffian, the pair-contraction expansion for the deformation of a word,
permutation sums for quantization and determinants.  Slow is fine.
"""

from itertools import combinations, permutations

from cliffbundle import CliffElt, TensorElt


def perm_sign(seq) -> int:
    """Sign of the permutation sorting seq, by counting bubble-sort swaps."""
    seq = list(seq)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                swaps += 1
                changed = True
    return -1 if swaps % 2 else 1


def all_pairings(items):
    """All ways to split items into unordered pairs (items has even length)."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for tail in all_pairings(rest):
            yield [(first, items[k])] + tail


def pfaffian_matchings(a):
    """Pfaffian as the signed sum over perfect matchings of {1..2n}.

    Each matching {(i1,j1),...,(in,jn)} with i < j in every pair
    contributes sign(i1 j1 i2 j2 ... in jn) * prod a(i,j).
    """
    n = a.ctx.dim
    field = a.ctx.field
    if n % 2:
        raise ValueError("odd size")
    total = field.zero
    for pairing in all_pairings(range(1, n + 1)):
        flat = []
        coeff = field.one
        for i, j in pairing:
            i, j = min(i, j), max(i, j)
            flat.extend((i, j))
            coeff = coeff * a.at(i, j)
        total = total + perm_sign(flat) * coeff
    return total


def deform_word_pairs(F, word):
    """Deformation of a basis word by summing over sets of disjoint
    position pairs: each choice of k pairs (p < q) removes those letters,
    multiplies by prod F(x_p, x_q), and carries the sign of the
    permutation rearranging the positions into
    (p1, q1, ..., pk, qk, rest ascending)."""
    ctx = F.ctx
    field = ctx.field
    p = len(word)
    out = TensorElt.zero(ctx)
    for k in range(p // 2 + 1):
        for chosen in combinations(range(p), 2 * k):
            for pairing in all_pairings(chosen):
                pairs = [tuple(sorted(pr)) for pr in pairing]
                coeff = field.one
                for a, b in pairs:
                    coeff = coeff * F.at(word[a], word[b])
                if not coeff:
                    continue
                used = {pos for pr in pairs for pos in pr}
                rest = [pos for pos in range(p) if pos not in used]
                arrangement = [pos for pr in pairs for pos in pr] + rest
                sgn = perm_sign(arrangement)
                rest_word = tuple(word[pos] for pos in rest)
                out = out + TensorElt.from_word(ctx, rest_word,
                                                coeff if sgn > 0 else -coeff)
    return out


def quantize_perm_sum(cctx, vectors):
    """Quantization of y1 ^ ... ^ yk as the normalized permutation sum
    (1/k!) sum_sigma sign(sigma) y_sigma(1) ... y_sigma(k); needs k!
    invertible."""
    k = len(vectors)
    field = cctx.field
    total = CliffElt.zero(cctx)
    for perm in permutations(range(k)):
        prod = CliffElt.unit(cctx)
        for idx in perm:
            prod = prod * CliffElt.from_vector(cctx, vectors[idx])
        total = total + perm_sign(perm) * prod
    fact = field.one
    for i in range(2, k + 1):
        fact = fact * i
    return (field.one / fact) * total


def det_perm_sum(rows):
    """Determinant by the Leibniz permutation sum."""
    n = len(rows)
    field = rows[0][0].field
    total = field.zero
    for perm in permutations(range(n)):
        coeff = field.one
        for i in range(n):
            coeff = coeff * rows[i][perm[i]]
        total = total + perm_sign(perm) * coeff
    return total
