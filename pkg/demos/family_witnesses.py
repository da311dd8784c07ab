"""Nonlinearity of Hadamard, simplex and MacDonald images via Schur witnesses."""

from zgray import verify_family_theorems

for r in verify_family_theorems():
    line = f"{r.family:16s} {str(r.params):12s} {'linear' if r.linear else 'nonlinear':9s} ({r.method})"
    if r.method == "schur_chain":
        i, u, v = r.witness
        line += f"  level {i}: u o v = {''.join(map(str, (u & v).bits()))}"
    print(line)
