"""Regenerate the JSON instance corpus shipped in src/bredon/corpus."""

from __future__ import annotations

import sys
from pathlib import Path

from bredon.cog.instances import d4_square, index_two_point, s3_chain, s4_branch
from bredon.coxeter import affine_A, coxeter_matrix, from_diagram, right_angled_cycle
from bredon.documents import dump_document, parse_document

OUT = Path(__file__).resolve().parents[1] / "src" / "bredon" / "corpus"


def ngon(n: int) -> dict:
    """Faces of a solid n-gon under reverse inclusion: the 2-face is the minimum."""
    edges = [f"e{i}" for i in range(n)]
    verts = [f"v{i}" for i in range(n)]
    rel = [["F", e] for e in edges]
    for i, e in enumerate(edges):
        rel += [[e, verts[i]], [e, verts[(i + 1) % n]]]
    return {"mode": "poset_omega", "name": f"{n}-gon of finite groups",
            "elements": ["F"] + edges + verts, "relations": rel}


def coxeter_doc(name: str, M) -> dict:
    return {"mode": "coxeter", "name": name, "generators": list(M.generators), "matrix": M.file_matrix()}


def graph_product(name: str, vertices, edges) -> dict:
    return {"mode": "graph_product", "name": name,
            "vertices": [{"name": v, "order": o} for v, o in vertices], "edges": [list(e) for e in edges]}


def development(name: str, scog) -> dict:
    Q = scog.Q
    return {
        "mode": "finite_development",
        "name": name,
        "degree": scog.G.degree,
        "group": {"generators": [list(g) for g in scog.G.generators]},
        "elements": list(Q.elements),
        "relations": [list(c) for c in Q.covers()],
        "locals": {J: {"generators": [list(g) for g in scog.locals[J].generators]} for J in Q.elements},
    }


def corpus() -> dict[str, dict]:
    docs: dict[str, dict] = {}
    for n in range(3, 9):
        docs[f"ngon_{n}"] = ngon(n)
    docs["point"] = {"mode": "poset_omega", "name": "single element", "elements": ["J"], "relations": []}
    docs["dinf_poset"] = {"mode": "poset_omega", "name": "infinite dihedral poset",
                          "elements": ["0", "s1", "s2"], "relations": [["0", "s1"], ["0", "s2"]]}
    for t in ["A1", "A2", "A3", "A4", "B3", "H3", "F4", "D4"]:
        docs[f"finite_{t}"] = coxeter_doc(f"finite type {t}", from_diagram(t))
    for m in [3, 4, 5, 6]:
        docs[f"dihedral_I2_{m}"] = coxeter_doc(f"I2({m})", from_diagram(f"I2({m})"))
    docs["dinf"] = coxeter_doc("infinite dihedral", from_diagram("I2(inf)"))
    docs["affine_A2"] = coxeter_doc("affine A2", affine_A(3))
    docs["affine_A3"] = coxeter_doc("affine A3", affine_A(4))
    docs["affine_C2"] = coxeter_doc("affine C2", coxeter_matrix(["s1", "s2", "s3"], [[1, 4, 2], [4, 1, 4], [2, 4, 1]]))
    docs["affine_G2"] = coxeter_doc("affine G2", coxeter_matrix(["s1", "s2", "s3"], [[1, 6, 2], [6, 1, 3], [2, 3, 1]]))
    for n in range(4, 9):
        docs[f"racg_cycle_{n}"] = coxeter_doc(f"right-angled {n}-cycle", right_angled_cycle(n))
    docs["gp_edgeless_2"] = graph_product("Z/2 * Z/3", [("a", 2), ("b", 3)], [])
    docs["gp_edgeless_3"] = graph_product("Z/2 * Z/2 * Z/5", [("a", 2), ("b", 2), ("c", 5)], [])
    docs["gp_complete_3"] = graph_product("(Z/2)^3", [("a", 2), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c"), ("a", "c")])
    docs["gp_pentagon"] = graph_product("pentagon of Z/2", [(f"v{i}", 2) for i in range(5)],
                                        [(f"v{i}", f"v{(i + 1) % 5}") for i in range(5)])
    docs["dev_s3_chain"] = development("S3 chain", s3_chain())
    docs["dev_s4_branch"] = development("S4 with two branches", s4_branch())
    docs["dev_d4_square"] = development("D4 square", d4_square())
    docs["dev_index_two"] = development("index-two point (0-sphere)", index_two_point())
    docs["dev_full_group"] = {"mode": "finite_development", "name": "single element, P_J = G", "degree": 3,
                              "group": {"generators": [[1, 0, 2], [1, 2, 0]]}, "elements": ["J"], "relations": [],
                              "locals": {"J": {"generators": [[1, 0, 2], [1, 2, 0]]}}}
    docs["dev_antichain"] = {"mode": "finite_development", "name": "antichain of two reflections in S3", "degree": 3,
                             "group": {"generators": [[1, 0, 2], [1, 2, 0]]}, "elements": ["U", "V"], "relations": [],
                             "locals": {"U": {"generators": [[1, 0, 2]]}, "V": {"generators": [[0, 2, 1]]}}}
    return docs


def main(out: Path = OUT) -> int:
    out.mkdir(parents=True, exist_ok=True)
    for name, data in corpus().items():
        (out / f"{name}.json").write_text(dump_document(parse_document(data)), encoding="utf-8")
    print(f"wrote {len(corpus())} documents to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1]) if len(sys.argv) > 1 else OUT))
