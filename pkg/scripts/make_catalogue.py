"""Regenerate the bundled catalogue JSON files.

Run from the repository root:  python scripts/make_catalogue.py
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from webfoam import skein, tait, webs  # noqa: E402

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "webfoam" / "data"


def write(name, doc):
    path = DATA / name
    path.write_text(json.dumps(doc, indent=1, default=str) + "\n")
    print("wrote", path.name)


def main():
    DATA.mkdir(parents=True, exist_ok=True)

    write("unknot.web.json", {"vertices": [], "edges": [{"id": "e", "circle": True}]})
    write("unknot.diagram.json", {"circles": ["e"]})
    write(
        "unlink_2.web.json",
        {"vertices": [], "edges": [{"id": "e1", "circle": True}, {"id": "e2", "circle": True}]},
    )
    write("unlink_2.diagram.json", {"circles": ["e1", "e2"]})

    theta_diag = {
        "vertices": [
            {"id": "u", "darts": ["e2", "e1", "e3"]},
            {"id": "w", "darts": ["e1", "e2", "e3"]},
        ]
    }
    write("theta.diagram.json", theta_diag)
    write("theta.web.json", json.loads(webs.serialize_web(webs.underlying_web(webs.parse_diagram(json.dumps(theta_diag))))))

    tet_diag = {
        "vertices": [
            {"id": "1", "darts": ["a", "d", "b"]},
            {"id": "2", "darts": ["c", "e", "a"]},
            {"id": "3", "darts": ["b", "f", "c"]},
            {"id": "4", "darts": ["d", "e", "f"]},
        ]
    }
    write("tetrahedron.diagram.json", tet_diag)
    write("tetrahedron.web.json", json.loads(webs.serialize_web(webs.underlying_web(webs.parse_diagram(json.dumps(tet_diag))))))

    cube_diag = {
        "vertices": [
            {"id": "1", "darts": ["o12", "o41", "s15"]},
            {"id": "2", "darts": ["o12", "s26", "o23"]},
            {"id": "3", "darts": ["o23", "s37", "o34"]},
            {"id": "4", "darts": ["o34", "s48", "o41"]},
            {"id": "5", "darts": ["i56", "s15", "i85"]},
            {"id": "6", "darts": ["s26", "i56", "i67"]},
            {"id": "7", "darts": ["i67", "i78", "s37"]},
            {"id": "8", "darts": ["i78", "i85", "s48"]},
        ]
    }
    write("cube.diagram.json", cube_diag)
    write("cube.web.json", json.loads(webs.serialize_web(webs.underlying_web(webs.parse_diagram(json.dumps(cube_diag))))))

    hopf_diag = {
        "crossings": [
            {"id": "c1", "darts": ["c", "a", "d", "b"], "over": [1, 3]},
            {"id": "c2", "darts": ["b", "d", "a", "c"], "over": [1, 3]},
        ]
    }
    write("hopf.diagram.json", hopf_diag)

    lhc_diag = {
        "vertices": [
            {"id": "v1", "darts": ["aT", "bar", "aB"]},
            {"id": "v2", "darts": ["bar", "cT", "cB"]},
        ],
        "crossings": [
            {"id": "x1", "darts": ["cT", "aT", "d", "b"], "over": [1, 3]},
            {"id": "x2", "darts": ["b", "d", "aB", "cB"], "over": [1, 3]},
        ],
    }
    write("lhc.diagram.json", lhc_diag)

    trefoil_diag = {
        "crossings": [
            {"id": "x1", "darts": ["1", "4", "2", "5"], "over": [1, 3]},
            {"id": "x2", "darts": ["3", "6", "4", "1"], "over": [1, 3]},
            {"id": "x3", "darts": ["5", "2", "6", "3"], "over": [1, 3]},
        ]
    }
    write("trefoil.diagram.json", trefoil_diag)

    hc_diag = {
        "vertices": [
            {"id": "v1", "darts": ["b", "l1", "l1"]},
            {"id": "v2", "darts": ["l2", "b", "l2"]},
        ]
    }
    write("handcuffs.diagram.json", hc_diag)
    write("handcuffs.web.json", json.loads(webs.serialize_web(webs.underlying_web(webs.parse_diagram(json.dumps(hc_diag))))))

    th_diag = {
        "vertices": [
            {"id": "v1", "darts": ["r1", "l1", "l1"]},
            {"id": "v2", "darts": ["q3", "r3", "q1"]},
        ],
        "crossings": [
            {"id": "y1", "darts": ["r2", "q1", "r1", "q2"], "over": [1, 3]},
            {"id": "y2", "darts": ["r3", "q3", "r2", "q2"], "over": [0, 2]},
        ],
    }
    write("tangled_handcuffs.diagram.json", th_diag)

    k33_diag = {
        "vertices": [
            {"id": "u1", "darts": ["h6", "d1a", "h1"]},
            {"id": "w2", "darts": ["h1", "d2b", "h2"]},
            {"id": "u3", "darts": ["d3", "h2", "h3"]},
            {"id": "w1", "darts": ["h3", "d1b", "h4"]},
            {"id": "u2", "darts": ["d2a", "h5", "h4"]},
            {"id": "w3", "darts": ["h6", "d3", "h5"]},
        ],
        "crossings": [
            {"id": "X", "darts": ["d2b", "d1a", "d2a", "d1b"], "over": [1, 3]}
        ],
    }
    write("k33.diagram.json", k33_diag)

    kinoshita_web = {
        "vertices": ["a", "b"],
        "edges": [
            {"id": "e1", "ends": [["a", 0], ["b", 0]]},
            {"id": "e2", "ends": [["a", 1], ["b", 1]]},
            {"id": "e3", "ends": [["a", 2], ["b", 2]]},
        ],
    }
    write("kinoshita_theta.web.json", kinoshita_web)

    # quick verification pass over everything just written
    for f in sorted(DATA.glob("*.diagram.json")):
        d = webs.parse_diagram(f.read_text())
        chi = skein.euler_char(d)
        print(f.name, "chi:", chi, "tait:", tait.tait_count(webs.underlying_web(d)))


if __name__ == "__main__":
    main()
