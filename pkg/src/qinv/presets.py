"""Bundled manifold presentations, in the same text format the CLI reads.

3-manifold presets (for ``rtw``): s3, s3-u+1, s1xs2, lens-<p>, poincare.
4-manifold presets (for ``broda4``): s4, s4-hopf, cp2, cp2bar, s2xs2, s1xs3.
``lens-<p>`` is a family: the p-framed unknot, e.g. lens-5 or lens--2.
"""

from __future__ import annotations

import re

PRESETS: dict[str, str] = {
    # --- surgery presentations of 3-manifolds ---
    "s3": "link s3\n",
    "s3-u+1": "link s3-u+1\ncup 0\ncap 0\nframing 0=1\n",
    "s1xs2": "link s1xs2\ncup 0\ncap 0\nframing 0=0\n",
    "poincare": "link poincare\nbraid 2 : s1 s1 s1\nframing 0=-1\n",
    # --- special framed links presenting 4-manifolds ---
    "s4": "link s4\n",
    "s4-hopf": "link s4-hopf\nbraid 2 : s1 s1\nframing 0=0\nframing 1=0\nspecial 1\n",
    "cp2": "link cp2\ncup 0\ncap 0\nframing 0=1\n",
    "cp2bar": "link cp2bar\ncup 0\ncap 0\nframing 0=-1\n",
    "s2xs2": "link s2xs2\nbraid 2 : s1 s1\nframing 0=0\nframing 1=0\n",
    "s1xs3": "link s1xs3\ncup 0\ncap 0\nframing 0=0\nspecial 0\n",
}

_LENS_RE = re.compile(r"^lens-(-?\d+)$")


def preset_text(name: str) -> str:
    m = _LENS_RE.match(name)
    if m:
        return f"link {name}\ncup 0\ncap 0\nframing 0={int(m.group(1))}\n"
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS) + ["lens-<p>"])
        raise KeyError(f"unknown preset {name!r}; available: {known}") from None
