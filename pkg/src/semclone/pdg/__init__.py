"""Code channel groundwork: dependence graphs for a mini imperative
language, exact isomorphism, and a line-JSON graph interchange format."""

from semclone.pdg.builder import build_pdg
from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex, isomorphic
from semclone.pdg.minilang import parse_program
from semclone.pdg.veg import GraphDatabase, load_veg, save_veg

__all__ = [
    "DependenceGraph",
    "Edge",
    "EdgeKind",
    "GraphDatabase",
    "Vertex",
    "build_pdg",
    "isomorphic",
    "load_veg",
    "parse_program",
    "save_veg",
]
