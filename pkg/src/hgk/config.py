"""Default caps for the exhaustive routines.

``HGK_CAP`` overrides them from the environment, either as one integer
applied to every cap or as ``name=value`` pairs separated by commas
(for example ``HGK_CAP=separators=18,domset=18``).
"""

from __future__ import annotations

import os

DEFAULT_CAPS = {
    "mim": 20,  # cut-relevant vertices after twin reduction
    "nec": 20,
    "separators": 16,
    "domset": 16,
    "clique": 20,
    "multicolored": 10**6,  # one-vertex-per-part tuples
}


def _parse_env(raw: str) -> dict:
    raw = raw.strip()
    if not raw:
        return {}
    if raw.isdigit():
        return {name: int(raw) for name in DEFAULT_CAPS}
    out = {}
    for item in raw.split(","):
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in DEFAULT_CAPS or not value.strip().isdigit():
            raise ValueError(f"bad HGK_CAP entry {item!r}")
        out[name] = int(value)
    return out


_override: dict = {}


def set_cap_override(value: int | dict | None) -> None:
    """Programmatic caps that win over ``HGK_CAP``; ``None`` clears them."""
    _override.clear()
    if value is None:
        return
    if isinstance(value, int):
        value = {name: value for name in DEFAULT_CAPS}
    for name, cap in value.items():
        if name not in DEFAULT_CAPS or int(cap) < 1:
            raise ValueError(f"bad cap {name}={cap}")
        _override[name] = int(cap)


def default_cap(name: str) -> int:
    caps = dict(DEFAULT_CAPS)
    caps.update(_parse_env(os.environ.get("HGK_CAP", "")))
    caps.update(_override)
    return caps[name]
