#!/usr/bin/env python3
"""Regenerate the bundled fixture files under src/ringua/fixtures/.

Run from the repository root: python scripts/gen_fixtures.py
The test suite asserts the committed files match what this script produces.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ringua.rings import RingSpec, make_cyclic_ring, make_matrix_ring, make_triangular_ring

FIXTURES = ROOT / "src" / "ringua" / "fixtures"


def dump_json(name: str, obj) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def dump_text(name: str, text: str) -> None:
    path = FIXTURES / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def local_f2_ring() -> RingSpec:
    """8-element commutative local ring: basis {1, x, y} over GF(2) with
    x*x = y*y = x*y = 0. Element index = c0 + 2*c1 + 4*c2 for c0 + c1 x + c2 y.
    """
    def coeffs(i):
        return i & 1, (i >> 1) & 1, (i >> 2) & 1

    def index(c0, c1, c2):
        return c0 | (c1 << 1) | (c2 << 2)

    n = 8
    add = [[i ^ j for j in range(n)] for i in range(n)]
    mul = []
    for i in range(n):
        a0, a1, a2 = coeffs(i)
        row = []
        for j in range(n):
            b0, b1, b2 = coeffs(j)
            row.append(index(a0 & b0, (a0 & b1) ^ (a1 & b0), (a0 & b2) ^ (a2 & b0)))
        mul.append(row)

    def label(i):
        c0, c1, c2 = coeffs(i)
        terms = [t for t, c in (("1", c0), ("x", c1), ("y", c2)) if c]
        return "+".join(terms) if terms else "0"

    return RingSpec(size=n, add=add, mul=mul, zero=0, one=1,
                    labels=[label(i) for i in range(n)])


def triangular_ring():
    """Tops Z/4 and Z/2, bimodule Z/2 with reduction-mod-2 left action."""
    top = make_cyclic_ring(4)
    bottom = make_cyclic_ring(2)
    left_action = [[(r % 2) * m % 2 for m in range(2)] for r in range(4)]
    right_action = [[m * s % 2 for s in range(2)] for m in range(2)]
    return make_triangular_ring(top, bottom, 2, left_action, right_action)


IMMUNOLOGY = {
    "lexicon": {
        "word_classes": {
            "antibody": "A",
            "antigen": "G",
            "lymphocyte": "C",
            "plasma cell": "C",
            "lymphoblast": "C",
            "cell": "C",
            "tissue": "T",
            "lymph stream": "T",
            "lymph node": "T",
            "foot-pad": "B",
            "foot-pad of rabbit": "B",
            "enzyme": "E",
            "polypeptide": "E",
            "protein": "E",
            "protein a": "E",
            "process": "P",
            "john": "N",
            "hydrochloric acid": "H",
            "water": "H",
        },
        "operator_classes": {
            "inject": "J",
            "arrive": "U",
            "move": "U",
            "find in": "V",
            "present in": "V",
            "appear in": "V",
            "later stage of": "Y",
            "activate": "K",
            "be activate by": {"symbol": "K", "passive": True},
            "wash in": "W",
        },
        "features": {
            "antibody": ["substance"],
            "antigen": ["substance"],
            "enzyme": ["substance"],
            "protein": ["substance"],
            "protein a": ["substance"],
            "polypeptide": ["substance", "molecule"],
            "process": ["process"],
            "john": ["person"],
            "hydrochloric acid": ["acid", "liquid"],
            "water": ["liquid"],
        },
        "lemmas": {
            "antibodies": "antibody",
            "antigens": "antigen",
            "lymphocytes": "lymphocyte",
            "lymphoblasts": "lymphoblast",
            "cells": "cell",
            "tissues": "tissue",
            "foot-pads": "foot-pad",
            "rabbits": "rabbit",
            "polypeptides": "polypeptide",
            "proteins": "protein",
            "processes": "process",
            "is": "be",
            "are": "be",
            "was": "be",
            "were": "be",
            "been": "be",
            "being": "be",
            "injects": "inject",
            "injected": "inject",
            "arrives": "arrive",
            "arrived": "arrive",
            "moves": "move",
            "moved": "move",
            "finds": "find",
            "found": "find",
            "appears": "appear",
            "appeared": "appear",
            "activates": "activate",
            "activated": "activate",
            "washes": "wash",
            "washed": "wash",
            "stages": "stage",
        },
        "function_words": [
            "the", "a", "an", "of", "in", "into", "by", "to", "be", "and",
            "or", "as", "at", "on", "with", "that", "this", "these", "those",
            "its", "their", "it", "they",
        ],
    },
    "grammar": {
        "class_symbols": ["A", "G", "C", "T", "B", "E", "P", "N", "H"],
        "operator_symbols": ["J", "U", "V", "Y", "K", "W"],
        "features": ["acid", "liquid", "molecule", "person", "process", "substance"],
        "patterns": ["GJB", "AVC", "GUT", "AVT", "CYC", "CCYC", ".K.", ".W."],
        "operator_constraints": {
            "K": [
                {
                    "allow_features": ["substance", "process"],
                    "forbid_features": ["person"],
                },
                {"allow_features": ["substance", "process"]},
            ],
            "W": [
                {"allow_classes": ["E"]},
                {"allow_classes": ["H"]},
            ],
        },
        "conjunctions": {"and": "permissive", "because": "permissive"},
        "transforms": ["passive"],
        "general_patterns": [".J.", ".U.", ".V.", ".K.", ".W."],
    },
}

CORE_SENTENCES = """\
Antibody is found in lymphocytes.
Antigen was injected into the foot-pads of rabbits.
Antigen arrives by the lymph stream.
"""

GENERAL_SENTENCES = """\
John activated protein A.
Hydrochloric acid was washed in polypeptides.
The weather was pleasant yesterday.
"""

DRIFT_CORPUS = [
    {"date": "1935", "text": "Antibody is found in the tissue."},
    {"date": "1936", "text": "Antibody is found in the tissue."},
    {"date": "1938", "text": "Antibody appears in the tissue."},
    {"date": "1939", "text": "Antibody is found in lymphocytes."},
    {"date": "1944", "text": "Antibody is found in lymphocytes."},
    {"date": "1946", "text": "Antibody appears in plasma cells."},
    {"date": "1948", "text": "Antibody is found in plasma cells."},
    {"date": "1949", "text": "Antibody is found in the tissue."},
    {"date": "1953", "text": "The plasma cell is a later stage of the lymphocyte."},
    {"date": "1955", "text": "The plasma cell is a later stage of the lymphoblast."},
    {"date": "1957", "text": "The lymphoblast is a later stage of the lymphocyte."},
    {"date": "1958", "text": "Antibody appears in plasma cells."},
    {"date": "1962", "text": "Plasma cells and lymphoblasts are later stages of lymphocytes."},
    {"date": "1964", "text": "Lymphoblasts and plasma cells are later stages of lymphocytes."},
    {"date": "1965", "text": "Plasma cells and lymphoblasts are later stages of lymphoblasts."},
    {"date": "1966", "text": "The plasma cell is a later stage of the lymphocyte."},
]


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    dump_json("z4.json", make_cyclic_ring(4).to_json())
    dump_json("z6.json", make_cyclic_ring(6).to_json())
    dump_json("m2_f2.json", make_matrix_ring(make_cyclic_ring(2)).to_json())
    dump_json("triangular.json", triangular_ring().to_json())
    dump_json("f2xy.json", local_f2_ring().to_json())
    dump_json("immunology.json", IMMUNOLOGY)
    dump_text("core_sentences.txt", CORE_SENTENCES)
    dump_text("general_sentences.txt", GENERAL_SENTENCES)
    dump_text(
        "drift_corpus.jsonl",
        "\n".join(json.dumps(r, sort_keys=True) for r in DRIFT_CORPUS) + "\n",
    )


if __name__ == "__main__":
    main()
