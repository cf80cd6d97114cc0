"""Gauss diagrams of virtual knots and 2-component links up to shell moves."""

import json

from ._shellmoves import (
    GaussDiagram,
    ShellmovesError,
    parse,
    profile_json,
    profile_text,
    random_walk,
    realize_knot,
    realize_link,
    replay,
    s_equivalent,
    serialize,
    snail_form,
    witness,
)


def invariants(diagram):
    """The invariant profile as a dict."""
    return json.loads(profile_json(diagram))


def load(path):
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


__all__ = [
    "GaussDiagram",
    "ShellmovesError",
    "invariants",
    "load",
    "parse",
    "profile_json",
    "profile_text",
    "random_walk",
    "realize_knot",
    "realize_link",
    "replay",
    "s_equivalent",
    "serialize",
    "snail_form",
    "witness",
]
