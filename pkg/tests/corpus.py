"""Access to the JSON corpus shipped with the package."""

import json
from importlib import resources

from bredon.documents import parse_document


def corpus_names():
    root = resources.files("bredon") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def corpus_path(name):
    return str(resources.files("bredon") / "corpus" / f"{name}.json")


def load(name):
    with open(corpus_path(name), encoding="utf-8") as fh:
        return parse_document(json.load(fh))


def coxeter_corpus():
    out = {}
    for name in corpus_names():
        doc = load(name)
        if doc.mode in ("coxeter", "graph_product"):
            out[name] = doc.coxeter()
    return out
