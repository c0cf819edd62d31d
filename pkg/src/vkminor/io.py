"""Facet-list and certificate files.

A complex file is a JSON map ``{"vertices": [labels...], "facets": [[i, ...], ...]}``
whose facet entries are 0-based indices into the label list.  When every
label is a nonnegative integer the labels themselves become the vertex ids;
otherwise the indices do and the labels are kept alongside for reporting.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import SimplicialComplex
from .minors import MinorCertificate


class FormatError(ValueError):
    pass


def complex_from_json(data) -> tuple[SimplicialComplex, list | None]:
    """The complex and, for non-integer labels, the label of each vertex id."""
    if not isinstance(data, dict) or "vertices" not in data or "facets" not in data:
        raise FormatError('expected a map with "vertices" and "facets"')
    labels = data["vertices"]
    facets = data["facets"]
    if not isinstance(labels, list) or not isinstance(facets, list):
        raise FormatError('"vertices" and "facets" must be lists')
    if len(set(map(_hashable, labels))) != len(labels):
        raise FormatError("duplicate vertex labels")
    integral = all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in labels)
    ids = list(labels) if integral else list(range(len(labels)))
    out = []
    used = set()
    for f in facets:
        if not isinstance(f, list):
            raise FormatError("each facet must be a list of indices")
        face = []
        for i in f:
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(labels):
                raise FormatError(f"facet index {i!r} is out of range")
            face.append(ids[i])
        if len(set(face)) != len(face):
            raise FormatError(f"facet {f!r} repeats a vertex")
        used.update(face)
        out.append(face)
    # listed vertices that no facet mentions are isolated points
    out += [[v] for v in ids if v not in used]
    return SimplicialComplex(out), (None if integral else list(labels))


def _hashable(x):
    return json.dumps(x, sort_keys=True)


def complex_to_json(K: SimplicialComplex, labels: list | None = None) -> dict:
    """Facets sorted lexicographically; ``labels[i]`` names vertex ``i`` when given."""
    verts = list(K.vertices)
    if labels is None:
        names = verts
    else:
        names = [labels[v] for v in verts]
    where = {v: i for i, v in enumerate(verts)}
    facets = sorted(sorted(where[v] for v in f) for f in K.facet_set)
    return {"vertices": names, "facets": facets}


def read_complex(path) -> tuple[SimplicialComplex, list | None]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return complex_from_json(data)


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_complex(path, K: SimplicialComplex, labels: list | None = None) -> None:
    Path(path).write_text(dumps(complex_to_json(K, labels)))


def read_certificate(path) -> MinorCertificate:
    try:
        data = json.loads(Path(path).read_text())
        return MinorCertificate.from_json(data)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path} is not a certificate: {exc}") from exc


def write_certificate(path, cert: MinorCertificate) -> None:
    Path(path).write_text(dumps(cert.to_json()))
