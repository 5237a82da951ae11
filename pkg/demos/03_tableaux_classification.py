"""From a semistandard tableau to a module and back.

Every SSYT T gives a family of modules M_T (one scalar per admissible box
pair).  For generic scalars, dim Hom(M_T, N(A)) is a box count g_A(T), and the
counts over connected A single out T among tableaux of the same shape and
content.
"""

from preproj import classify, classify_report, generic_scalars, signature, ssyt_enumerate
from preproj.modules import direct_sum, simple_module
from preproj.tableaux import f_signature, type_t_module

shape, content = (3, 2), (1, 2, 1, 1)
tableaux = ssyt_enumerate(shape, content)
print(f"{len(tableaux)} tableaux of shape {shape} and content {content}:")
for t in tableaux:
    sig = {str(a): k for a, k in signature(t).items() if k}
    print(f"  {t}   nonzero signature {sig}")

t = tableaux[-1]
m = type_t_module(t, generic_scalars(t, seed=3))
assert f_signature(m) == signature(t)
print(f"\nM_T for T = {t} has dimensions {m.dims}; classified back to {classify(m, shape, content)}")

# A direct sum of simples sits in the closure of a component without being generic in it.
report = classify_report(direct_sum(simple_module(3, 1), simple_module(3, 2)), (2, 1), (1, 1, 1))
print(f"\nS_1 + S_2 matches {report.tableau}, degenerate = {report.degenerate}")
for note in report.diagnostics:
    print("  ", note)
