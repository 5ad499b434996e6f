# %% [markdown]
# Demazure atoms from colored ice
# ===============================
#
# Build the U-turn model for lambda = (2, 1) in rank 2 for every Weyl
# element, draw a state or two, and compare each partition function with
# z^rho times the Demazure atom computed by divided differences.

# %%
from uturn.algebra import to_text
from uturn.demazure import CartanData, atom_polynomial, character, rho_monomial
from uturn.model import build_model, enumerate_states, partition_function, render_state, state_weight
from uturn.weyl import all_elements, from_word, word_text

lam = (2, 1)
cd = CartanData("C", 2)
rho = rho_monomial(2)

# %% [markdown]
# The identity has a single admissible state, the "ground state".  Rows
# marked G run left to right, rows marked D run back to the left boundary
# after the U-turn on the right.

# %%
m = build_model(lam, from_word((), 2))
(s,) = enumerate_states(m)
print(render_state(m, s))
print("weight:", state_weight(m, s))

# %% [markdown]
# Now all eight elements.  The two columns agree term by term.

# %%
print(f"{'w':<12} {'states':>6}  Z")
total = None
for w in all_elements(2):
    m = build_model(lam, w)
    z = partition_function(m)
    assert z == rho * atom_polynomial(w, lam, cd)
    total = z if total is None else total + z
    print(f"{word_text(w):<12} {len(enumerate_states(m)):>6}  {to_text(z)}")

# %% [markdown]
# Summing the atoms gives z^rho times the Sp(4) character.

# %%
assert total == rho * character(lam, cd)
print("sum of atoms:", to_text(total))

# %% [markdown]
# In type B the same states carry a binomial at every empty U-turn.

# %%
mb = build_model(lam, from_word((2,), 2), type="B")
print(word_text(mb.w), "type B:", partition_function(mb))
