"""Loader for the transcribed multivariate systems under ``data/systems``.

File format, one entry per line::

    label: polynomial          printed artifact
    label!: polynomial         recomputed replacement for a misprinted artifact
    # comment

The file stem is the proof-case slug with ``/`` written as ``_``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..errors import PolySyntaxError, TranscriptionMissing
from ..mpoly import MPoly, mp_parse


@dataclass(frozen=True)
class TranscribedSystem:
    slug: str
    header: str
    printed: dict[str, MPoly]
    texts: dict[str, str]
    errata: dict[str, MPoly] = field(default_factory=dict)

    @property
    def equations(self) -> dict[str, MPoly]:
        return {k: v for k, v in self.printed.items() if k.startswith("eq")}

    def __getitem__(self, label: str) -> MPoly:
        return self.printed[label]


def _filename(slug: str) -> str:
    return slug.replace("/", "_") + ".txt"


def available() -> list[str]:
    root = resources.files("zeroapn.data").joinpath("systems")
    return sorted(p.name[:-4].replace("_", "/") for p in root.iterdir() if p.name.endswith(".txt"))


def parse_system(slug: str, text: str) -> TranscribedSystem:
    printed, texts, errata = {}, {}, {}
    header = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not printed:
                header.append(line.lstrip("# "))
            continue
        if ":" not in line:
            raise PolySyntaxError(f"{slug}:{lineno}: expected 'label: polynomial'")
        label, body = (s.strip() for s in line.split(":", 1))
        poly = mp_parse(body)
        if label.endswith("!"):
            errata[label[:-1]] = poly
        else:
            printed[label] = poly
            texts[label] = body
    return TranscribedSystem(slug, " ".join(header), printed, texts, errata)


@lru_cache(maxsize=None)
def load_system(slug: str) -> TranscribedSystem:
    path = resources.files("zeroapn.data").joinpath("systems", _filename(slug))
    if not path.is_file():
        raise TranscriptionMissing(f"no transcription for proof case {slug}: the case is not printed in the source")
    return parse_system(slug, path.read_text())
