# %% [markdown]
# Patterns, tableaux and the right key
# ====================================
#
# Reading the vertical layers of a state gives a symplectic Proctor
# pattern; layering a pattern gives a reverse King tableau.  Coloring an
# uncolored state in the atom models picks out a unique Weyl element, the
# key of the tableau.

# %%
from uturn.algebra import to_text
from uturn.model import build_model, enumerate_states
from uturn.patterns import (key_partition, pattern_to_tableau, pattern_weight, state_to_pattern,
                            verify_bijection)
from uturn.weyl import longest_element, word_text

lam = (2, 1)
m = build_model(lam, longest_element(2), "character")
for s in enumerate_states(m)[:4]:
    p = state_to_pattern(m, s)
    print(p, pattern_to_tableau(p), to_text(pattern_weight(p)))

# %% [markdown]
# Both maps are bijections, with z^rho * wt(pattern) = wt(state).

# %%
print("type C problems:", verify_bijection(lam, "C"))
print("type B problems:", verify_bijection(lam, "B"))

# %% [markdown]
# Group the 16 tableaux by key.

# %%
for w, tabs in key_partition(lam).items():
    print(f"{word_text(w):<12}", "  ".join(map(str, tabs)))

# %% [markdown]
# In type B a half-integer on the right edge of a pattern turns into an
# infinity in the tableau.

# %%
for w, tabs in key_partition((1, 1), "B").items():
    print(f"{word_text(w):<8}", "  ".join(map(str, tabs)))
