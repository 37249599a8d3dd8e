"""
JSON formats for complexes and homology reports.

Simplicial JSON: {"vertices": N, "facets": [[...], ...]}
Homology report: {"degrees": {"-1": {...}, "0": {"rank": r, "torsion": [...]}, ...},
                  "classification": "Wedge(1,3)"}
"""

import json
from pathlib import Path
from typing import Any

from ..exceptions import ComplexFormatError
from .homology import HomologyProfile, classify_profile
from .simplicial_complex import SimplicialComplex


def complex_to_dict(x: SimplicialComplex) -> dict[str, Any]:
    """
    Serialize a complex by its facets.

    @brief Simplicial JSON document.
    """
    data: dict[str, Any] = {
        "vertices": x.vertex_count,
        "facets": [list(f) for f in x.facets()],
    }
    if x.labels is not None:
        data["labels"] = [str(label) for label in x.labels]
    return data


def complex_from_dict(data: dict[str, Any]) -> SimplicialComplex:
    """
    Rebuild a complex from a simplicial JSON document.

    @brief Parse simplicial JSON.
    @param data Mapping with "vertices" and "facets"
    @return Face closure of the facets
    """
    try:
        vertex_count = int(data["vertices"])
        facets = [tuple(int(v) for v in facet) for facet in data["facets"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ComplexFormatError("malformed simplicial JSON", {"error": str(e)}) from e
    labels = data.get("labels")
    return SimplicialComplex.from_facets(vertex_count, facets, labels)


def homology_report(profile: HomologyProfile) -> dict[str, Any]:
    """Homology report document with its classification."""
    return {
        "degrees": profile.to_dict(),
        "classification": str(classify_profile(profile)),
    }


def save_complex(x: SimplicialComplex, path: str | Path, profile: HomologyProfile | None = None):
    """
    Write a complex, optionally with its homology report, as JSON.

    @brief Export a complex to a file.
    """
    document = complex_to_dict(x)
    if profile is not None:
        document["homology"] = homology_report(profile)
    Path(path).write_text(json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_complex(path: str | Path) -> SimplicialComplex:
    """Read a complex from a simplicial JSON file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ComplexFormatError("cannot read complex file", {"path": str(path)}) from e
    except json.JSONDecodeError as e:
        raise ComplexFormatError("complex file is not valid JSON", {"path": str(path)}) from e
    return complex_from_dict(data)
