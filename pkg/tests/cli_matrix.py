"""Fixed-seed invocations covering every subcommand, with expected exit codes."""

import subprocess
import sys

GOLDEN = [
    (["catalog"], 0),
    (["verify", "--map", "F_I", "--check", "yb"], 0),
    (["verify", "--map", "FV_NEG", "--check", "yb"], 1),
    (["verify", "--map", "H_IIIB", "--check", "yb", "--method", "numeric", "--seed", "3", "--samples", "50"], 0),
    (["verify", "--map", "FV_NEG", "--check", "yb", "--method", "numeric", "--seed", "3", "--samples", "50"], 1),
    (["verify", "--map", "H_I", "--check", "reversible"], 0),
    (["verify", "--map", "F_III", "--check", "involution", "--method", "numeric", "--seed", "1"], 0),
    (["verify", "--map", "H_V", "--check", "quadrirational"], 0),
    (["verify", "--map", "F_II", "--check", "quadrirational", "--method", "numeric", "--seed", "2"], 0),
    (["singular", "--map", "F_I"], 0),
    (["singular", "--map", "H_I", "--params", "2,3"], 0),
    (["singular", "--map", "F_V"], 2),
    (["build", "--X=inf,1,0,2", "--U=0,2,inf,1", "--Y=inf,1,0,3", "--V=inf,1,0,3", "--check"], 0),
    (["cube", "--X=inf,1,0,2", "--Y=inf,1,0,3", "--Z=inf,1,0,5", "--pi1=rho3", "--pi2=rho3", "--pi3=rho3",
      "--seed", "4", "--samples", "50"], 0),
    (["cube", "--X=inf,1,0,2", "--Y=inf,1,0,3", "--Z=inf,1,0,5", "--pi1=Id", "--pi2=rho1", "--pi3=rho3",
      "--seed", "4", "--samples", "50"], 1),
    (["conics", "--type", "I", "--alpha", "2", "--beta", "5/2", "--seed", "7", "--samples", "50"], 0),
    (["conics", "--type", "III", "--alpha", "2", "--beta", "3"], 0),
    (["tropical", "--map", "H_IIIB", "--samples", "2000", "--seed", "11", "--range", "1000"], 0),
    (["tropical", "--map", "F_V"], 2),
    (["equiv", "--map-a", "H_I", "--map-b", "H_Iplus", "--phi", "1/(x - 1)", "--mode", "conjugate"], 0),
    (["equiv", "--map-a", "H_I2", "--map-b", "H_I", "--phi", "(x - 1)/x", "--reparam", "(alpha - 1)/alpha"], 0),
    (["equiv", "--map-a", "F_I", "--map-b", "H_I", "--phi", "alpha/x", "--mode", "twist"], 0),
    (["equiv", "--map-a", "F_I", "--map-b", "H_I", "--phi", "x"], 1),
]


def run_cli(args, cwd=None):
    p = subprocess.run([sys.executable, "-m", "quadyb", *args], capture_output=True, text=True, cwd=cwd)
    return p.returncode, p.stdout, p.stderr
