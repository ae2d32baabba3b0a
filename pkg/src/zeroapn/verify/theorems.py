"""Theorem tags and the proof cases they name.

A proof case is identified by a slug ``<shape of n>/<case>``, e.g. ``3m+1/2``.
The numeric tags accepted on the command line (``3.4-case2`` and so on) are
aliases; the slugs themselves are accepted too.
"""

from __future__ import annotations

import re

from ..errors import TranscriptionMissing, UnknownTheorem
from ..families import all_families

# numeric tag -> slug
ALIASES = {
    "3.1": "2m+1/1",
    "3.1-case1": "2m+1/1",
    "3.1-case2": "2m+1/2",
    "3.2": "3m-1/1",
    "3.2-case1": "3m-1/1",
    "3.2-case2": "3m-1/2",
    "3.3": "3m/1",
    "3.4-case1": "3m+1/1",
    "3.4-case2": "3m+1/2",
    "3.4-case3": "4m-1/3",
    "3.4-case4": "4m-1/4",
    "3.5": "4m+1/1",
    "3.6": "5m/1",
    "3.6-case1": "5m/1",
    "3.6-case2": "5m/2",
}

_SPACED = re.compile(r"^(\d\.\d)\s*(?:[-_ ]?\s*case\s*(\d))?$", re.I)


def all_cases() -> list[str]:
    return sorted({f.case for f in all_families()})


def printed_cases() -> list[str]:
    return sorted({f.case for f in all_families() if f.printed})


def normalize_tag(tag: str) -> str:
    t = tag.strip()
    m = _SPACED.match(t)
    if m:
        return m.group(1) + (f"-case{m.group(2)}" if m.group(2) else "")
    return t.replace("_", "/")


def resolve(tag: str) -> str:
    """Slug for a tag; UnknownTheorem if unknown, TranscriptionMissing if unprinted."""
    t = normalize_tag(tag)
    slug = ALIASES.get(t, t)
    fams = [f for f in all_families() if f.case == slug]
    if not fams:
        raise UnknownTheorem(f"unknown theorem tag {tag!r}")
    if not any(f.printed for f in fams):
        raise TranscriptionMissing(
            f"{tag}: proof case {slug} is only stated as similar; transcription not in the source"
        )
    return slug


def tags_for(slug: str) -> list[str]:
    return [k for k, v in ALIASES.items() if v == slug]


def primary_tag(slug: str) -> str:
    tags = tags_for(slug)
    return tags[0] if tags else slug
