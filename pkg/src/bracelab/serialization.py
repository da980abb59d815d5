"""Read and write the JSON object kinds exchanged by the command line.

Each object serializes to a dict with a ``kind`` discriminator; ``dumps``
emits canonical JSON (sorted keys, compact separators) so identical objects
always produce byte-identical text.  Loading validates: a well-formed payload
that fails an algebraic law raises the usual structural error, while a
malformed payload (wrong kind, missing field, ragged table) raises
``BadPayload``.

Action and triplet files carry only images; loading them needs the ambient
groups (``actor``/``space``, or ``brace``/``coeff``) passed as context.
"""

from __future__ import annotations

import json

from .braces import SkewBrace, validate_brace
from .cohomology.relative import RRB2Cochain
from .cohomology.rota_baxter import RB2Cochain
from .cohomology.skew_brace import ActionTriplet, SB2Cochain, validate_good_triplet
from .errors import BadPayload
from .groups import ElementMap, FiniteGroup, GroupAction, validate_action, validate_group
from .rota_baxter import RRBGroup, validate_rrb
from .yang_baxter import YBESolution


def canonical_json(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _rows(table):
    return [list(int(v) for v in row) for row in table]


def to_data(obj):
    """The JSON-ready dict for any supported object."""
    if isinstance(obj, FiniteGroup):
        return {"kind": "group", "order": obj.n, "table": _rows(obj.table)}
    if isinstance(obj, ElementMap):
        return {"kind": "map", "values": [int(v) for v in obj.values]}
    if isinstance(obj, GroupAction):
        return {
            "kind": "action",
            "contravariant": bool(obj.contravariant),
            "images": _rows(obj.images),
        }
    if isinstance(obj, SkewBrace):
        return {
            "kind": "skew_brace",
            "order": obj.n,
            "add": _rows(obj.add.table),
            "mul": _rows(obj.mul.table),
        }
    if isinstance(obj, RRBGroup):
        return {
            "kind": "rrb",
            "h": to_data(obj.h_group),
            "g": to_data(obj.g_group),
            "phi": to_data(obj.phi),
            "r": to_data(obj.r),
        }
    if isinstance(obj, YBESolution):
        return {
            "kind": "ybe",
            "size": obj.size,
            "left": _rows(obj.left),
            "right": _rows(obj.right),
        }
    if isinstance(obj, SB2Cochain):
        return {"kind": "sb2", "g": _rows(obj.g), "f": _rows(obj.f)}
    if isinstance(obj, RB2Cochain):
        return {"kind": "rb2", "tau": _rows(obj.tau), "r": [int(v) for v in obj.r]}
    if isinstance(obj, RRB2Cochain):
        return {
            "kind": "rrb2",
            "tau1": _rows(obj.tau1),
            "tau2": _rows(obj.tau2),
            "rho": _rows(obj.rho),
            "chi": [int(v) for v in obj.chi],
        }
    if isinstance(obj, ActionTriplet):
        return {
            "kind": "triplet",
            "xi": to_data(obj.xi),
            "zeta": to_data(obj.zeta),
            "eps": to_data(obj.eps),
        }
    raise BadPayload(f"no serialization for {type(obj).__name__}")


def _require(data, kind):
    if not isinstance(data, dict):
        raise BadPayload(f"expected a JSON object, got {type(data).__name__}")
    got = data.get("kind")
    if got != kind:
        raise BadPayload(f"expected kind {kind!r}, got {got!r}")


def _field(data, name):
    if name not in data:
        raise BadPayload(f"{data.get('kind')} payload is missing field {name!r}")
    return data[name]


def _int_rows(data, name):
    try:
        return [[int(v) for v in row] for row in _field(data, name)]
    except (TypeError, ValueError) as exc:
        raise BadPayload(f"field {name!r} is not a table of integers") from exc


def _int_row(data, name):
    try:
        return [int(v) for v in _field(data, name)]
    except (TypeError, ValueError) as exc:
        raise BadPayload(f"field {name!r} is not a list of integers") from exc


def _check_order(data, rows):
    order = _field(data, "order")
    if order != len(rows):
        raise BadPayload(f"declared order {order} but table has {len(rows)} rows")


def action_images(data):
    """Shape-checked (images, contravariant) from an action payload.

    The homomorphism law needs the ambient groups; that check happens when
    the action is combined with them (see ``from_data`` context arguments).
    """
    _require(data, "action")
    images = _int_rows(data, "images")
    for i, perm in enumerate(images):
        if sorted(perm) != list(range(len(perm))):
            raise BadPayload(f"image {i} is not a permutation")
    flag = _field(data, "contravariant")
    if not isinstance(flag, bool):
        raise BadPayload("contravariant must be a boolean")
    return images, flag


def from_data(data, actor=None, space=None, brace=None, coeff=None):
    """The validated object described by a payload dict.

    ``action`` payloads need ``actor`` and ``space``; ``triplet`` payloads
    need ``brace`` and ``coeff``.
    """
    if not isinstance(data, dict) or "kind" not in data:
        raise BadPayload("payload must be a JSON object with a 'kind' field")
    kind = data["kind"]
    if kind == "group":
        rows = _int_rows(data, "table")
        _check_order(data, rows)
        return validate_group(rows)
    if kind == "map":
        return ElementMap(_int_row(data, "values"))
    if kind == "action":
        images, flag = action_images(data)
        if actor is None or space is None:
            raise BadPayload("an action payload needs actor and space context")
        return validate_action(actor, space, images, contravariant=flag)
    if kind == "skew_brace":
        add = _int_rows(data, "add")
        mul = _int_rows(data, "mul")
        _check_order(data, add)
        return validate_brace(add, mul)
    if kind == "rrb":
        h = from_data(_field(data, "h"))
        g = from_data(_field(data, "g"))
        if not isinstance(h, FiniteGroup) or not isinstance(g, FiniteGroup):
            raise BadPayload("rrb fields 'h' and 'g' must be group payloads")
        images, flag = action_images(_field(data, "phi"))
        if flag:
            raise BadPayload("the rrb action must be covariant")
        r = from_data(_field(data, "r"))
        if not isinstance(r, ElementMap):
            raise BadPayload("rrb field 'r' must be a map payload")
        return validate_rrb(h, g, tuple(tuple(p) for p in images), r)
    if kind == "ybe":
        left = _int_rows(data, "left")
        right = _int_rows(data, "right")
        size = _field(data, "size")
        if size != len(left) or size != len(right):
            raise BadPayload(f"declared size {size} does not match the tables")
        return YBESolution(left, right)
    if kind == "sb2":
        return SB2Cochain(_int_rows(data, "g"), _int_rows(data, "f"))
    if kind == "rb2":
        return RB2Cochain(_int_rows(data, "tau"), _int_row(data, "r"))
    if kind == "rrb2":
        return RRB2Cochain(
            _int_rows(data, "tau1"),
            _int_rows(data, "tau2"),
            _int_rows(data, "rho"),
            _int_row(data, "chi"),
        )
    if kind == "triplet":
        if brace is None or coeff is None:
            raise BadPayload("a triplet payload needs brace and coeff context")
        parts = []
        for name in ("xi", "zeta", "eps"):
            images, _ = action_images(_field(data, name))
            parts.append(tuple(tuple(p) for p in images))
        return validate_good_triplet(brace, coeff, *parts)
    raise BadPayload(f"unknown kind {kind!r}")


def dumps(obj):
    return canonical_json(to_data(obj))


def loads(text, **context):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadPayload(f"not valid JSON: {exc}") from exc
    return from_data(data, **context)


def save(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj) + "\n")


def load(path, **context):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), **context)
