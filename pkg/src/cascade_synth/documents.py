"""JSON documents for systems and realization results.

Matrices are nested lists; complex scalars are two-element [re, im] arrays,
never strings.  Serialization is canonical (keys sorted, compact separators,
shortest round-trip float formatting), so byte content, and therefore the
sha256 digests derived from it, is stable across platforms.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

import numpy as np

from .composition import CascadeChain
from .errors import ParseError
from .model import (
    ComplexMatrix,
    PassiveForm,
    RealMatrix,
    SlhSystem,
    from_passive_form,
    max_abs,
)

SCHEMA_VERSION = "1"

HERMITICITY_TOL = 1e-9


def canonical_json(obj) -> str:
    """Serialize to the canonical byte-stable JSON form."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def document_digest(data: Mapping) -> str:
    """sha256 hex digest of the canonical JSON encoding."""
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def _require(cond, message, path):
    if not cond:
        raise ParseError(message, path)


def _encode_real_matrix(a) -> list:
    return [[float(x) for x in row] for row in np.asarray(a, dtype=float)]


def _encode_complex_matrix(a) -> list:
    return [
        [[float(z.real), float(z.imag)] for z in row]
        for row in np.asarray(a, dtype=complex)
    ]


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _decode_real_matrix(obj, rows, cols, path) -> RealMatrix:
    _require(isinstance(obj, list), "expected an array of rows", path)
    _require(len(obj) == rows, f"expected {rows} rows, got {len(obj)}", path)
    out = np.zeros((rows, cols))
    for i, row in enumerate(obj):
        _require(isinstance(row, list), "expected an array", f"{path}[{i}]")
        _require(
            len(row) == cols, f"expected {cols} columns, got {len(row)}", f"{path}[{i}]"
        )
        for j, cell in enumerate(row):
            _require(_is_number(cell), "expected a real number", f"{path}[{i}][{j}]")
            out[i, j] = float(cell)
    _require(bool(np.all(np.isfinite(out))) if out.size else True, "non-finite entry", path)
    return out


def _decode_complex_matrix(obj, rows, cols, path) -> ComplexMatrix:
    _require(isinstance(obj, list), "expected an array of rows", path)
    _require(len(obj) == rows, f"expected {rows} rows, got {len(obj)}", path)
    out = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(obj):
        _require(isinstance(row, list), "expected an array", f"{path}[{i}]")
        _require(
            len(row) == cols, f"expected {cols} columns, got {len(row)}", f"{path}[{i}]"
        )
        for j, cell in enumerate(row):
            _require(
                isinstance(cell, list)
                and len(cell) == 2
                and all(_is_number(x) for x in cell),
                "expected a [re, im] pair",
                f"{path}[{i}][{j}]",
            )
            out[i, j] = complex(cell[0], cell[1])
    _require(bool(np.all(np.isfinite(out))) if out.size else True, "non-finite entry", path)
    return out


def _count(data, key):
    value = data.get(key)
    _require(
        isinstance(value, int) and not isinstance(value, bool) and value >= 0,
        "expected a non-negative integer",
        f"$.{key}",
    )
    return value


def _loads_object(text) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    _require(isinstance(data, dict), "document must be a JSON object", "$")
    return data


_GENERAL_KEYS = {"schema_version", "form", "n", "m", "S", "K", "R"}
_PASSIVE_KEYS = {"schema_version", "form", "n", "m", "S", "K_tilde", "R_tilde"}


@dataclass(frozen=True, eq=False)
class SystemDocument:
    """Serializable description of one system, in quadrature ('general') or
    annihilation-variable ('passive') form.  Both forms carry the scattering
    matrix; the passive form stores the Hermitian Hamiltonian matrix and the
    annihilation coupling instead of their quadrature expansions."""

    form: str
    s: ComplexMatrix
    k: Optional[ComplexMatrix] = None
    r: Optional[RealMatrix] = None
    k_tilde: Optional[ComplexMatrix] = None
    r_tilde: Optional[ComplexMatrix] = None
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        if self.form == "general":
            present, absent = ("k", "r"), ("k_tilde", "r_tilde")
        elif self.form == "passive":
            present, absent = ("k_tilde", "r_tilde"), ("k", "r")
        else:
            raise ValueError(f"form must be 'general' or 'passive', got {self.form!r}")
        for name in present:
            if getattr(self, name) is None:
                raise ValueError(f"{self.form} form requires {name}")
        for name in absent:
            if getattr(self, name) is not None:
                raise ValueError(f"{self.form} form must not carry {name}")
        s = np.array(self.s, dtype=complex)
        s.setflags(write=False)
        object.__setattr__(self, "s", s)
        for name in present:
            dtype = float if name == "r" else complex
            a = np.array(getattr(self, name), dtype=dtype)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        # delegate shape validation to the domain type
        self.to_system()

    @property
    def n(self) -> int:
        return self.r.shape[0] // 2 if self.form == "general" else self.r_tilde.shape[0]

    @property
    def m(self) -> int:
        return self.s.shape[0]

    @classmethod
    def from_system(cls, sys: SlhSystem) -> "SystemDocument":
        return cls(form="general", s=sys.s, k=sys.k, r=sys.r)

    @classmethod
    def from_passive(cls, pf: PassiveForm, s) -> "SystemDocument":
        return cls(form="passive", s=s, k_tilde=pf.k_tilde, r_tilde=pf.r_tilde)

    def to_system(self) -> SlhSystem:
        """Materialize the quadrature system this document describes."""
        if self.form == "general":
            return SlhSystem(s=self.s, k=self.k, r=self.r)
        pf = PassiveForm(
            r_tilde=self.r_tilde,
            k_tilde=self.k_tilde,
            offset=float(np.trace(self.r_tilde).real) / 4,
        )
        return from_passive_form(pf, self.s, tol_sym=HERMITICITY_TOL)

    def to_dict(self) -> dict:
        data = {
            "schema_version": self.schema_version,
            "form": self.form,
            "n": self.n,
            "m": self.m,
            "S": _encode_complex_matrix(self.s),
        }
        if self.form == "general":
            data["K"] = _encode_complex_matrix(self.k)
            data["R"] = _encode_real_matrix(self.r)
        else:
            data["K_tilde"] = _encode_complex_matrix(self.k_tilde)
            data["R_tilde"] = _encode_complex_matrix(self.r_tilde)
        return data

    @classmethod
    def from_dict(cls, data) -> "SystemDocument":
        _require(isinstance(data, dict), "document must be a JSON object", "$")
        version = data.get("schema_version")
        _require(
            version == SCHEMA_VERSION,
            f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION!r})",
            "$.schema_version",
        )
        form = data.get("form")
        _require(
            form in ("general", "passive"),
            f"form must be 'general' or 'passive', got {form!r}",
            "$.form",
        )
        allowed = _GENERAL_KEYS if form == "general" else _PASSIVE_KEYS
        unknown = sorted(set(data) - allowed)
        _require(not unknown, f"unknown fields {unknown}", "$")
        missing = sorted(allowed - set(data))
        _require(not missing, f"missing fields {missing}", "$")
        n = _count(data, "n")
        m = _count(data, "m")
        s = _decode_complex_matrix(data["S"], m, m, "$.S")
        if form == "general":
            return cls(
                form="general",
                s=s,
                k=_decode_complex_matrix(data["K"], m, 2 * n, "$.K"),
                r=_decode_real_matrix(data["R"], 2 * n, 2 * n, "$.R"),
            )
        r_tilde = _decode_complex_matrix(data["R_tilde"], n, n, "$.R_tilde")
        _require(
            max_abs(r_tilde - r_tilde.conj().T) <= HERMITICITY_TOL,
            f"R_tilde must be Hermitian within {HERMITICITY_TOL:.1e}",
            "$.R_tilde",
        )
        return cls(
            form="passive",
            s=s,
            k_tilde=_decode_complex_matrix(data["K_tilde"], m, n, "$.K_tilde"),
            r_tilde=r_tilde,
        )

    def dumps(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def loads(cls, text) -> "SystemDocument":
        return cls.from_dict(_loads_object(text))

    def digest(self) -> str:
        """sha256 digest of the canonical encoding, used to tie realization
        documents back to their input."""
        return document_digest(self.to_dict())


_REALIZATION_KEYS = {
    "schema_version",
    "input_digest",
    "stages",
    "V",
    "residual_R",
    "reports",
}


@dataclass(frozen=True, eq=False)
class RealizationDocument:
    """Serializable result of a decomposition or passive-realization run:
    the one-mode stages (input end first), the symplectic transform when one
    was constructed, the residual interaction when one is needed, and the
    numerical reports of every certification that ran."""

    input_digest: str
    stages: tuple[SlhSystem, ...]
    v: Optional[RealMatrix] = None
    residual_r: Optional[RealMatrix] = None
    reports: Mapping[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if not isinstance(self.input_digest, str):
            raise ValueError("input_digest must be a string")
        for name in ("v", "residual_r"):
            value = getattr(self, name)
            if value is not None:
                a = np.array(value, dtype=float)
                a.setflags(write=False)
                object.__setattr__(self, name, a)
        object.__setattr__(self, "reports", dict(self.reports))

    @property
    def n(self) -> int:
        return len(self.stages)

    def to_chain(self) -> CascadeChain:
        """Rebuild the cascade chain (validating the chain invariants)."""
        return CascadeChain(stages=self.stages, residual_r=self.residual_r)

    def to_dict(self) -> dict:
        data = {
            "schema_version": self.schema_version,
            "input_digest": self.input_digest,
            "stages": [
                {
                    "S": _encode_complex_matrix(st.s),
                    "K": _encode_complex_matrix(st.k),
                    "R": _encode_real_matrix(st.r),
                }
                for st in self.stages
            ],
            "reports": dict(self.reports),
        }
        if self.v is not None:
            data["V"] = _encode_real_matrix(self.v)
        if self.residual_r is not None:
            data["residual_R"] = _encode_real_matrix(self.residual_r)
        return data

    @classmethod
    def from_dict(cls, data) -> "RealizationDocument":
        _require(isinstance(data, dict), "document must be a JSON object", "$")
        version = data.get("schema_version")
        _require(
            version == SCHEMA_VERSION,
            f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION!r})",
            "$.schema_version",
        )
        unknown = sorted(set(data) - _REALIZATION_KEYS)
        _require(not unknown, f"unknown fields {unknown}", "$")
        missing = sorted({"input_digest", "stages", "reports"} - set(data))
        _require(not missing, f"missing fields {missing}", "$")
        _require(isinstance(data["input_digest"], str), "expected a string", "$.input_digest")
        _require(isinstance(data["stages"], list), "expected an array", "$.stages")
        _require(len(data["stages"]) > 0, "expected at least one stage", "$.stages")
        stages = []
        for i, entry in enumerate(data["stages"]):
            path = f"$.stages[{i}]"
            _require(isinstance(entry, dict), "expected an object", path)
            _require(
                set(entry) == {"S", "K", "R"}, "expected fields S, K, R", path
            )
            _require(
                isinstance(entry["S"], list), "expected an array of rows", f"{path}.S"
            )
            m = len(entry["S"])
            stages.append(
                SlhSystem(
                    s=_decode_complex_matrix(entry["S"], m, m, f"{path}.S"),
                    k=_decode_complex_matrix(entry["K"], m, 2, f"{path}.K"),
                    r=_decode_real_matrix(entry["R"], 2, 2, f"{path}.R"),
                )
            )
        nn = 2 * len(stages)
        v = None
        if "V" in data:
            v = _decode_real_matrix(data["V"], nn, nn, "$.V")
        residual = None
        if "residual_R" in data:
            residual = _decode_real_matrix(data["residual_R"], nn, nn, "$.residual_R")
        _require(isinstance(data["reports"], dict), "expected an object", "$.reports")
        return cls(
            input_digest=data["input_digest"],
            stages=tuple(stages),
            v=v,
            residual_r=residual,
            reports=data["reports"],
        )

    def dumps(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def loads(cls, text) -> "RealizationDocument":
        return cls.from_dict(_loads_object(text))

    def digest(self) -> str:
        return document_digest(self.to_dict())
