"""
The ``.qha`` instance file format.

A ``.qha`` file is a JSON document with sorted keys, two-space indentation and a trailing
newline. Every tensor is stored as ``{"dims": [...], "data": [...]}`` with the entries
flattened row-major and written as rational strings (``"p"`` or ``"p/q"``)::

    {
      "algebra": {"alpha", "antipode", "antipode_inv"?, "beta", "comult", "counit",
                  "mult", "name", "phi", "phi_inv"?, "unit"},
      "braided_hopf": [{"action", "antipode"?, "coaction", "comult", "counit", "dim",
                        "mult", "name", "unit"}]?,
      "meta": {"dim", "field": "Q", "name"},
      "modules": [{"action", "coaction", "dim", "flavor", "name"}]?,
      "r_matrix": {"R", "name"}?
    }

When ``phi_inv`` is missing it is computed from ``phi``. Parsing checks shapes and literals
only; whether the constants satisfy any axiom is left to the checkers.
"""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import QuasiBialgebra, QuasiHopfAlgebra
from .braided import BraidedHopfAlgebra, braided_from_structure
from .exceptions import InstanceFormatError, NotInvertibleError
from .instances import Instance
from .quasitriangular import QTStructure
from .tensor import zeros
from .utils import format_scalar, parse_scalar
from .yetter_drinfeld import FLAVORS, YDModule

logger = logging.getLogger(__name__)

FIELD = "Q"
SUFFIX = ".qha"


# -- emit ------------------------------------------------------------------------------------


def _tensor(array: np.ndarray) -> dict[str, Any]:
    return {"dims": list(array.shape), "data": [format_scalar(x) for x in array.reshape(-1)]}


def _braided_to_dict(B: BraidedHopfAlgebra) -> dict[str, Any]:
    out = {
        "name": B.name,
        "dim": B.dim,
        "action": _tensor(B.carrier.action),
        "coaction": _tensor(B.carrier.coaction),
        "mult": _tensor(B.algebra.mult),
        "unit": _tensor(B.algebra.unit),
        "comult": _tensor(B.coalgebra.comult),
        "counit": _tensor(B.coalgebra.counit),
    }
    if B.antipode is not None:
        out["antipode"] = _tensor(B.antipode)
    return out


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    """The JSON document of ``instance``; optional blocks are left out when empty."""
    A = instance.algebra
    algebra = {
        "name": A.name,
        "mult": _tensor(A.mult),
        "unit": _tensor(A.unit),
        "comult": _tensor(A.comult),
        "counit": _tensor(A.counit),
        "phi": _tensor(A.phi),
        "phi_inv": _tensor(A.phi_inv),
        "antipode": _tensor(A.antipode),
        "alpha": _tensor(A.alpha),
        "beta": _tensor(A.beta),
    }
    if A.antipode_inv is not None:
        algebra["antipode_inv"] = _tensor(A.antipode_inv)
    doc: dict[str, Any] = {
        "meta": {"name": instance.name, "dim": A.dim, "field": FIELD},
        "algebra": algebra,
    }
    if instance.qt is not None:
        doc["r_matrix"] = {"name": instance.qt.name, "R": _tensor(instance.qt.R)}
    if instance.modules:
        doc["modules"] = [
            {
                "name": M.name,
                "flavor": M.flavor,
                "dim": M.dim,
                "action": _tensor(M.action),
                "coaction": _tensor(M.coaction),
            }
            for M in instance.modules
        ]
    if instance.braided:
        doc["braided_hopf"] = [_braided_to_dict(B) for B in instance.braided]
    return doc


def emit_instance(instance: Instance) -> str:
    """Canonical text of ``instance``; parsing it back and emitting again gives the same bytes."""
    return json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False, sort_keys=True) + "\n"


def write_instance(instance: Instance, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_instance(instance), encoding="utf-8")
    logger.info(f"Wrote {instance.name} to {path}")
    return path


# -- parse -----------------------------------------------------------------------------------


def _block(doc: dict[str, Any], key: str, where: str = "") -> dict[str, Any]:
    field = f"{where}.{key}" if where else key
    if key not in doc:
        raise InstanceFormatError(field, "missing block")
    value = doc[key]
    if not isinstance(value, dict):
        raise InstanceFormatError(field, f"expected an object, got {type(value).__name__}")
    return value


def _string(block: dict[str, Any], key: str, where: str, default: str | None = None) -> str:
    value = block.get(key, default)
    if not isinstance(value, str):
        raise InstanceFormatError(f"{where}.{key}", "expected a string")
    return value


def _dim(block: dict[str, Any], where: str) -> int:
    value = block.get("dim")
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InstanceFormatError(f"{where}.dim", f"expected a positive integer, got {value!r}")
    return value


def _read_tensor(block: dict[str, Any], key: str, where: str, shape: tuple[int, ...]) -> np.ndarray:
    """
    Decode ``block[key]`` into an exact array of the given shape.

    Raises:
        InstanceFormatError: If the tensor is missing, has other dims, the wrong number of entries,
            or a malformed rational
    """
    field = f"{where}.{key}"
    raw = _block(block, key, where)
    dims = raw.get("dims")
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise InstanceFormatError(f"{field}.dims", "expected a list of integers")
    if tuple(dims) != shape:
        raise InstanceFormatError(f"{field}.dims", f"dimension mismatch: got {dims}, expected {list(shape)}")
    data = raw.get("data")
    if not isinstance(data, list):
        raise InstanceFormatError(f"{field}.data", "expected a list of rational strings")
    if len(data) != math.prod(shape):
        raise InstanceFormatError(f"{field}.data", f"expected {math.prod(shape)} entries, got {len(data)}")
    out = zeros((len(data),))
    for i, text in enumerate(data):
        out[i] = parse_scalar(text, f"{field}[{i}]")
    return out.reshape(shape)


def _read_algebra(block: dict[str, Any], d: int) -> QuasiHopfAlgebra:
    where = "algebra"
    cube, square, vector = (d, d, d), (d, d), (d,)
    arrays = {key: _read_tensor(block, key, where, cube) for key in ("mult", "comult", "phi")}
    for key in ("unit", "counit", "alpha", "beta"):
        arrays[key] = _read_tensor(block, key, where, vector)
    arrays["antipode"] = _read_tensor(block, "antipode", where, square)
    antipode_inv = _read_tensor(block, "antipode_inv", where, square) if "antipode_inv" in block else None
    if "phi_inv" in block:
        phi_inv = _read_tensor(block, "phi_inv", where, cube)
    else:
        base = QuasiBialgebra(
            arrays["mult"], arrays["unit"], arrays["comult"], arrays["counit"], arrays["phi"], arrays["phi"]
        )
        try:
            phi_inv = base.inverse_element(base.Phi(), ("1", "2", "3")).data
        except NotInvertibleError as e:
            raise InstanceFormatError(f"{where}.phi", "not invertible in H⊗H⊗H") from e
        logger.debug("Computed phi_inv from phi")
    return QuasiHopfAlgebra(
        arrays["mult"],
        arrays["unit"],
        arrays["comult"],
        arrays["counit"],
        arrays["phi"],
        phi_inv,
        arrays["antipode"],
        arrays["alpha"],
        arrays["beta"],
        antipode_inv=antipode_inv,
        name=_string(block, "name", where, default=""),
    )


def _list(doc: dict[str, Any], key: str) -> list[dict[str, Any]]:
    value = doc.get(key, [])
    if not isinstance(value, list) or not all(isinstance(item, dict) for item in value):
        raise InstanceFormatError(key, "expected a list of objects")
    return value


def _read_module(block: dict[str, Any], where: str, A: QuasiHopfAlgebra) -> YDModule:
    flavor = _string(block, "flavor", where, default="left")
    if flavor not in FLAVORS:
        raise InstanceFormatError(f"{where}.flavor", f"unknown flavor '{flavor}', expected one of {list(FLAVORS)}")
    n, d = _dim(block, where), A.dim
    action = _read_tensor(block, "action", where, (d, n, n))
    coaction = _read_tensor(block, "coaction", where, (n, d, n))
    return YDModule(A, action, coaction, flavor, name=_string(block, "name", where, default=""))


def _read_braided(block: dict[str, Any], where: str, A: QuasiHopfAlgebra) -> BraidedHopfAlgebra:
    n, d = _dim(block, where), A.dim
    antipode = _read_tensor(block, "antipode", where, (n, n)) if "antipode" in block else None
    return braided_from_structure(
        A,
        _read_tensor(block, "action", where, (d, n, n)),
        _read_tensor(block, "coaction", where, (n, d, n)),
        _read_tensor(block, "mult", where, (n, n, n)),
        _read_tensor(block, "unit", where, (n,)),
        _read_tensor(block, "comult", where, (n, n, n)),
        _read_tensor(block, "counit", where, (n,)),
        antipode,
        name=_string(block, "name", where, default=""),
    )


def instance_from_dict(doc: Any) -> Instance:
    """
    Build an :class:`Instance` from a decoded document.

    Raises:
        InstanceFormatError: On the first missing block, dimension mismatch or malformed rational
    """
    if not isinstance(doc, dict):
        raise InstanceFormatError("<root>", "expected a JSON object")
    meta = _block(doc, "meta")
    d = _dim(meta, "meta")
    field = _string(meta, "field", "meta", default=FIELD)
    if field != FIELD:
        raise InstanceFormatError("meta.field", f"unsupported field '{field}', only '{FIELD}' is supported")
    A = _read_algebra(_block(doc, "algebra"), d)
    qt = None
    if "r_matrix" in doc:
        block = _block(doc, "r_matrix")
        qt = QTStructure(A, _read_tensor(block, "R", "r_matrix", (d, d)), name=_string(block, "name", "r_matrix", ""))
    modules = tuple(_read_module(b, f"modules[{i}]", A) for i, b in enumerate(_list(doc, "modules")))
    braided = tuple(_read_braided(b, f"braided_hopf[{i}]", A) for i, b in enumerate(_list(doc, "braided_hopf")))
    return Instance(_string(meta, "name", "meta", default=""), A, qt, modules, braided)


def parse_instance_text(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError("<document>", e.msg, line=e.lineno) from e
    return instance_from_dict(doc)


def parse_instance(path: Path) -> Instance:
    """
    Read and structurally validate a ``.qha`` file.

    Raises:
        FileNotFoundError: If ``path`` does not exist
        InstanceFormatError: If the file is not a well-formed instance
    """
    path = Path(path)
    logger.info(f"Parsing instance file {path}")
    instance = parse_instance_text(path.read_text(encoding="utf-8"))
    logger.debug(f"Parsed {instance.name}: dim {instance.algebra.dim}, {len(instance.modules)} modules")
    return instance
