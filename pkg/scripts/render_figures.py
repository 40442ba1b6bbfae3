"""Write the conic scenes as SVG files: the type I pencil with a chord, the
same chord with the rho3 twist, the involutions, and the type III pencil.

    python3 scripts/render_figures.py --outdir figures
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from quadyb.conics import SceneConfig, render_svg

SCENES = {
    "pencil_I_chord": SceneConfig(chords=[(Fraction(1, 2), Fraction(-2))], title="type I pencil, chord map"),
    "pencil_I_twisted": SceneConfig(chords=[(Fraction(1, 2), Fraction(-2))], twist="rho3",
                                    title="type I pencil, rho3 twist"),
    "pencil_I_involutions": SceneConfig(chords=[(Fraction(3, 2), Fraction(-1, 3))], involutions=True,
                                        title="type I pencil, involutions"),
    "pencil_III": SceneConfig(pencil="III", title="type III pencil"),
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args(argv)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, cfg in SCENES.items():
        path = out / f"{name}.svg"
        path.write_text(render_svg(cfg))
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
