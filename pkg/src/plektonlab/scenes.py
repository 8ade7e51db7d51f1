"""Scene files: named cone/wedge paths described by apex, central angle,
half-opening and sheet index.

Format (JSON):

    {
      "frame": {"reference_angle": 1.5707963267948966},
      "cones": [
        {"id": "C1", "apex": [0, 0, 0], "center_angle": 0.0,
         "half_opening": 0.1, "sheet": 0, "kind": "cone"}
      ]
    }

``kind`` is one of "cone", "wedge", "cone-complement"; wedges may omit
``half_opening`` (it is pi/2 by definition).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .cones import (
    KIND_CONE,
    KIND_CONE_COMPLEMENT,
    KIND_WEDGE,
    ConePath,
    ReferenceFrame,
    cone_path,
    wedge_path,
)
from .minkowski import MVec3


class SceneError(ValueError):
    """Scene file failed validation."""


@dataclass
class Scene:
    frame: ReferenceFrame
    paths: dict[str, ConePath] = field(default_factory=dict)

    def __getitem__(self, key: str) -> ConePath:
        return self.paths[key]

    def ids(self) -> list[str]:
        return list(self.paths)


def _build_entry(entry: dict, index: int) -> tuple[str, ConePath]:
    where = f"cones[{index}]"
    if not isinstance(entry, dict):
        raise SceneError(f"{where}: expected an object")
    try:
        cid = entry["id"]
        apex_raw = entry["apex"]
        center = float(entry["center_angle"])
    except KeyError as exc:
        raise SceneError(f"{where}: missing field {exc.args[0]!r}") from None
    if not isinstance(cid, str) or not cid:
        raise SceneError(f"{where}: id must be a non-empty string")
    if not (isinstance(apex_raw, list) and len(apex_raw) == 3):
        raise SceneError(f"{where}: apex must be a 3-element array")
    apex = MVec3(*(float(x) for x in apex_raw))
    sheet = int(entry.get("sheet", 0))
    kind = entry.get("kind", KIND_CONE)
    if kind not in (KIND_CONE, KIND_WEDGE, KIND_CONE_COMPLEMENT):
        raise SceneError(f"{where}: unknown kind {kind!r}")
    if kind == KIND_WEDGE:
        half = float(entry.get("half_opening", math.pi / 2.0))
        if abs(half - math.pi / 2.0) > 1e-9:
            raise SceneError(f"{where}: wedges have half_opening pi/2")
        return cid, wedge_path(apex, center, sheet)
    try:
        half = float(entry["half_opening"])
    except KeyError:
        raise SceneError(f"{where}: missing field 'half_opening'") from None
    if not (0.0 < half < math.pi / 2.0):
        raise SceneError(f"{where}: half_opening must lie in (0, pi/2)")
    return cid, cone_path(apex, center, half, sheet, kind=kind)


def parse_scene(doc: dict) -> Scene:
    if not isinstance(doc, dict):
        raise SceneError("scene document must be an object")
    frame_doc = doc.get("frame", {})
    if not isinstance(frame_doc, dict):
        raise SceneError("frame must be an object")
    frame = ReferenceFrame(float(frame_doc.get("reference_angle", math.pi / 2.0)))
    cones = doc.get("cones")
    if not isinstance(cones, list):
        raise SceneError("scene must contain a 'cones' array")
    scene = Scene(frame=frame)
    for i, entry in enumerate(cones):
        cid, path = _build_entry(entry, i)
        if cid in scene.paths:
            raise SceneError(f"cones[{i}]: duplicate id {cid!r}")
        scene.paths[cid] = path
    return scene


def load_scene(filename) -> Scene:
    with open(filename, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(
            f"{filename}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    try:
        return parse_scene(doc)
    except SceneError as exc:
        raise SceneError(f"{filename}: {exc}") from None
