"""Annihilators, commutators, quotient braces, and isoclinism.

Two skew braces are isoclinic when their central quotients H / Ann(H) and
their commutator sub-braces H' can be identified compatibly with the two
pairings

    theta(a-bar, b-bar)  = a . b . a^-1 . b^-1
    theta*(a-bar, b-bar) = lam_a(b) . b^-1

both of which descend to annihilator cosets and land in the commutator.
``find_isoclinism`` searches for such an identification; ``square_isoclinism``
lifts one to the squares of the braces whenever both squares satisfy the
annihilator-product hypothesis Ann(H~) = Ann(H) x Ann(H), going through the
carrier identification H~/(Ann x Ann) = (H/Ann)~ componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import (
    ISOMORPHISM_ORDER_BOUND,
    SkewBrace,
    find_brace_isomorphisms,
    is_brace_homomorphism,
    validate_brace,
)
from .errors import (
    HypothesisFails,
    LiftFails,
    NotAnIdeal,
    OrderTooLarge,
    PreconditionFails,
    SearchTooLarge,
)
from .groups import ElementMap, group_center, pair_index, subgroup_closure
from .squares import square_brace

SQUARE_ORDER_BOUND = 64


@dataclass(frozen=True)
class BraceIdeal:
    """A validated ideal: construct via :func:`validate_ideal`."""

    brace: SkewBrace
    elements: tuple


def validate_ideal(B, elements):
    """Check closure under both products, lambda-invariance, add-normality."""
    members = tuple(sorted({int(e) for e in elements}))
    if not members or members[0] != 0:
        raise NotAnIdeal("an ideal must contain the identity 0")
    if members[-1] >= B.n:
        raise NotAnIdeal(f"element {members[-1]} is outside the carrier")
    inside = set(members)
    for a in members:
        for b in members:
            if B.dot(a, b) not in inside:
                raise NotAnIdeal(
                    f"not closed under the additive product at ({a},{b})",
                    witness=(a, b),
                )
            if B.circ(a, b) not in inside:
                raise NotAnIdeal(
                    f"not closed under the circle product at ({a},{b})",
                    witness=(a, b),
                )
    for x in range(B.n):
        xi = B.dot_inv(x)
        for a in members:
            if B.lam(x, a) not in inside:
                raise NotAnIdeal(
                    f"not lambda-invariant at ({x},{a})", witness=(x, a)
                )
            if B.dot(B.dot(x, a), xi) not in inside:
                raise NotAnIdeal(
                    f"not normal in the additive group at ({x},{a})",
                    witness=(x, a),
                )
    return BraceIdeal(B, members)


def fix_lambda(B):
    """Elements fixed by every lambda automorphism, sorted ascending."""
    return [a for a in range(B.n) if all(B.lam(x, a) == a for x in range(B.n))]


def annihilator(B):
    """ker(lambda) and the additive center and Fix(lambda), as an ideal.

    Equivalently: the a with b o a = a o b = b . a = a . b for every b.
    """
    members = [
        a
        for a in range(B.n)
        if all(B.lam(a, b) == b for b in range(B.n))
        and all(B.dot(a, b) == B.dot(b, a) for b in range(B.n))
        and all(B.lam(x, a) == a for x in range(B.n))
    ]
    return validate_ideal(B, members)


def brace_commutator(B):
    """The additive subgroup generated by commutators and lambda twists."""
    gens = set()
    for a in range(B.n):
        ai = B.dot_inv(a)
        for b in range(B.n):
            bi = B.dot_inv(b)
            gens.add(B.dot(B.dot(B.dot(a, b), ai), bi))
            gens.add(B.dot(B.lam(a, b), bi))
    return validate_ideal(B, subgroup_closure(B.add, gens))


@dataclass(frozen=True)
class BraceQuotient:
    """The brace on cosets, the projection, and one representative per coset."""

    brace: SkewBrace
    project: ElementMap
    section: tuple


def quotient_brace(B, ideal):
    """The brace on cosets of an ideal; the coset of 0 is numbered 0.

    Cosets are numbered by ascending minimal element, with the minimal
    element as canonical representative; the projection is a homomorphism
    for both operations.
    """
    if isinstance(ideal, BraceIdeal):
        if ideal.brace.add.table != B.add.table or ideal.brace.mul.table != B.mul.table:
            raise NotAnIdeal("the ideal belongs to a different brace")
        members = ideal.elements
    else:
        members = validate_ideal(B, ideal).elements
    coset_min = [min(B.dot(x, i) for i in members) for x in range(B.n)]
    reps = sorted(set(coset_min))
    index = {r: c for c, r in enumerate(reps)}
    project = [index[coset_min[x]] for x in range(B.n)]
    q = len(reps)
    q_add = [[project[B.dot(reps[i], reps[j])] for j in range(q)] for i in range(q)]
    q_mul = [[project[B.circ(reps[i], reps[j])] for j in range(q)] for i in range(q)]
    for x in range(B.n):
        px = project[x]
        for y in range(B.n):
            if (
                project[B.dot(x, y)] != q_add[px][project[y]]
                or project[B.circ(x, y)] != q_mul[px][project[y]]
            ):
                raise NotAnIdeal(
                    f"coset products are not well defined at ({x},{y})",
                    witness=(x, y),
                )
    return BraceQuotient(validate_brace(q_add, q_mul), ElementMap(project), tuple(reps))


@dataclass(frozen=True)
class SubBrace:
    """A sub-brace on a renumbered carrier with its embedding."""

    brace: SkewBrace
    embed: ElementMap


def sub_brace(B, elements):
    """The brace induced on a subset closed under both operations."""
    members = tuple(sorted({int(e) for e in elements}))
    if not members or members[0] != 0:
        raise PreconditionFails("a sub-brace must contain the identity 0")
    position = {e: i for i, e in enumerate(members)}
    k = len(members)
    try:
        s_add = [
            [position[B.dot(members[i], members[j])] for j in range(k)]
            for i in range(k)
        ]
        s_mul = [
            [position[B.circ(members[i], members[j])] for j in range(k)]
            for i in range(k)
        ]
    except KeyError as exc:
        raise PreconditionFails(
            f"subset is not closed under both operations; escapes at {exc}"
        ) from exc
    return SubBrace(validate_brace(s_add, s_mul), ElementMap(members))


@dataclass(frozen=True)
class IsoclinismFrame:
    """Everything the isoclinism diagram needs for one brace.

    ``theta`` and ``theta_star`` map pairs of quotient cosets into the
    commutator carrier; their construction verifies pairwise that both are
    constant on annihilator cosets.
    """

    brace: SkewBrace
    quotient: BraceQuotient
    commutator: SubBrace
    theta: tuple
    theta_star: tuple


def _pairing_values(B, position):
    theta = [
        [
            position[B.dot(B.dot(B.dot(a, b), B.dot_inv(a)), B.dot_inv(b))]
            for b in range(B.n)
        ]
        for a in range(B.n)
    ]
    theta_star = [
        [position[B.dot(B.lam(a, b), B.dot_inv(b))] for b in range(B.n)]
        for a in range(B.n)
    ]
    return theta, theta_star


def isoclinism_frame(B):
    quotient = quotient_brace(B, annihilator(B))
    commutator = sub_brace(B, brace_commutator(B).elements)
    position = {e: i for i, e in enumerate(commutator.embed)}
    full_theta, full_star = _pairing_values(B, position)
    project, reps = quotient.project, quotient.section
    for x in range(B.n):
        rx = reps[project(x)]
        for y in range(B.n):
            ry = reps[project(y)]
            assert full_theta[x][y] == full_theta[rx][ry], (
                f"theta is not constant on cosets at ({x},{y})"
            )
            assert full_star[x][y] == full_star[rx][ry], (
                f"theta* is not constant on cosets at ({x},{y})"
            )
    q = quotient.brace.n
    theta = tuple(tuple(full_theta[reps[i]][reps[j]] for j in range(q)) for i in range(q))
    star = tuple(tuple(full_star[reps[i]][reps[j]] for j in range(q)) for i in range(q))
    return IsoclinismFrame(B, quotient, commutator, theta, star)


@dataclass(frozen=True)
class IsoclinismWitness:
    """Carrier maps between the quotient braces and the commutator braces."""

    xi1: ElementMap
    xi2: ElementMap


def _frame_failure(fa, fb, w):
    qa, qb = fa.quotient.brace, fb.quotient.brace
    ca, cb = fa.commutator.brace, fb.commutator.brace
    xi1, xi2 = tuple(w.xi1), tuple(w.xi2)
    if len(xi1) != qa.n or sorted(xi1) != list(range(qb.n)):
        return "shape", ("xi1",)
    if len(xi2) != ca.n or sorted(xi2) != list(range(cb.n)):
        return "shape", ("xi2",)
    if not is_brace_homomorphism(ElementMap(xi1), qa, qb):
        return "xi1", ()
    if not is_brace_homomorphism(ElementMap(xi2), ca, cb):
        return "xi2", ()
    for c1 in range(qa.n):
        for c2 in range(qa.n):
            if xi2[fa.theta[c1][c2]] != fb.theta[xi1[c1]][xi1[c2]]:
                return "theta", (c1, c2)
            if xi2[fa.theta_star[c1][c2]] != fb.theta_star[xi1[c1]][xi1[c2]]:
                return "theta-star", (c1, c2)
    return None


def isoclinism_failure(A, B, w):
    """None if the witness is an isoclinism, else (failing square, pair)."""
    return _frame_failure(isoclinism_frame(A), isoclinism_frame(B), w)


def check_isoclinism(A, B, w):
    return isoclinism_failure(A, B, w) is None


def find_isoclinism(A, B):
    """The lexicographically first witness over all isomorphism pairs, or None."""
    fa, fb = isoclinism_frame(A), isoclinism_frame(B)
    if (
        fa.quotient.brace.n != fb.quotient.brace.n
        or fa.commutator.brace.n != fb.commutator.brace.n
    ):
        return None
    largest = max(fa.quotient.brace.n, fa.commutator.brace.n)
    if largest > ISOMORPHISM_ORDER_BOUND:
        raise SearchTooLarge(
            f"order {largest} exceeds isomorphism search bound "
            f"{ISOMORPHISM_ORDER_BOUND}"
        )
    xi2_candidates = find_brace_isomorphisms(fa.commutator.brace, fb.commutator.brace)
    if not xi2_candidates:
        return None
    for xi1 in find_brace_isomorphisms(fa.quotient.brace, fb.quotient.brace):
        for xi2 in xi2_candidates:
            w = IsoclinismWitness(xi1, xi2)
            if _frame_failure(fa, fb, w) is None:
                return w
    return None


def square_annihilator_hypothesis(B):
    """Whether Ann of the square is exactly Ann(B) x Ann(B).

    The product is always contained in the square's annihilator; that
    inclusion is asserted unconditionally, since its failure would mean a
    defect rather than a property of the brace.
    """
    if B.n * B.n > SQUARE_ORDER_BOUND:
        raise OrderTooLarge(
            f"square order {B.n * B.n} exceeds bound {SQUARE_ORDER_BOUND}"
        )
    sq = square_brace(B).brace
    ann = annihilator(B).elements
    ann_sq = set(annihilator(sq).elements)
    product = {pair_index(a1, a2, B.n) for a1 in ann for a2 in ann}
    assert product <= ann_sq, "annihilator product escapes the square annihilator"
    return ann_sq == product


def _aligned_quotient(B, frame, square_frame):
    """The carrier map identifying the square's quotient with the quotient's square.

    Sends each coset of Ann x Ann in the square to the pair of component
    cosets; verified to be an isomorphism onto the square of the quotient
    brace — the identification the lift is stated through.
    """
    qb = frame.quotient.brace
    sq_quotient = square_frame.quotient
    target = square_brace(qb).brace
    if sq_quotient.brace.n != target.n:
        raise LiftFails(
            "the square quotient and the quotient square have different orders"
        )
    project = frame.quotient.project
    phi = []
    for rep in sq_quotient.section:
        a1, a2 = divmod(rep, B.n)
        phi.append(pair_index(project(a1), project(a2), qb.n))
    if sorted(phi) != list(range(target.n)) or not is_brace_homomorphism(
        ElementMap(phi), sq_quotient.brace, target
    ):
        raise LiftFails(
            "coset pairing does not identify the square quotient with the "
            "quotient square"
        )
    return phi


def _lift_xi1(A, B, fa, fb, fsa, fsb, xi1):
    phi_a = _aligned_quotient(A, fa, fsa)
    phi_b = _aligned_quotient(B, fb, fsb)
    phi_b_inv = {v: c for c, v in enumerate(phi_b)}
    qa_n, qb_n = fa.quotient.brace.n, fb.quotient.brace.n
    lifted = []
    for c in range(fsa.quotient.brace.n):
        c1, c2 = divmod(phi_a[c], qa_n)
        lifted.append(phi_b_inv[pair_index(xi1(c1), xi1(c2), qb_n)])
    return ElementMap(lifted)


def _lift_xi2(A, B, fa, fb, fsa, fsb, xi2):
    pos_a = {e: i for i, e in enumerate(fa.commutator.embed)}
    pos_sb = {e: i for i, e in enumerate(fsb.commutator.embed)}
    embed_b = tuple(fb.commutator.embed)
    lifted = []
    for e in fsa.commutator.embed:
        a1, a2 = divmod(e, A.n)
        if a1 not in pos_a or a2 not in pos_a:
            raise LiftFails(
                f"square commutator element ({a1},{a2}) has a component "
                "outside the commutator"
            )
        image = pair_index(embed_b[xi2(pos_a[a1])], embed_b[xi2(pos_a[a2])], B.n)
        if image not in pos_sb:
            raise LiftFails(
                f"componentwise image {image} is not in the square commutator"
            )
        lifted.append(pos_sb[image])
    return ElementMap(lifted)


@dataclass(frozen=True)
class SquareIsoclinismVerdict:
    isoclinic: bool
    witness: IsoclinismWitness


def square_isoclinism(A, B, w):
    """Lift an isoclinism to the squares and verify it.

    Requires the annihilator-product hypothesis on both sides; the lifted
    witness acts componentwise on quotient cosets (through the coset-pairing
    identification) and on commutator pairs.  A verification failure raises
    ``LiftFails``, which would falsify a theorem and so flags a defect.
    """
    if not check_isoclinism(A, B, w):
        raise PreconditionFails("the witness is not an isoclinism of the inputs")
    for side, brace in (("first", A), ("second", B)):
        if not square_annihilator_hypothesis(brace):
            raise HypothesisFails(
                f"the {side} brace has a square annihilator larger than the "
                "product of annihilators",
                witness=side,
            )
    fa, fb = isoclinism_frame(A), isoclinism_frame(B)
    fsa = isoclinism_frame(square_brace(A).brace)
    fsb = isoclinism_frame(square_brace(B).brace)
    lifted = IsoclinismWitness(
        _lift_xi1(A, B, fa, fb, fsa, fsb, w.xi1),
        _lift_xi2(A, B, fa, fb, fsa, fsb, w.xi2),
    )
    failure = _frame_failure(fsa, fsb, lifted)
    if failure is not None:
        raise LiftFails(f"lifted witness fails the {failure[0]} square at {failure[1]}")
    return SquareIsoclinismVerdict(True, lifted)


def circle_center(B):
    """The center of the circle group, sorted ascending."""
    return group_center(B.mul)
