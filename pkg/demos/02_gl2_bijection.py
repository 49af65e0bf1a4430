from lktmap import build_orbit, closed_form_lkt, lkt_map

# The two nilpotent orbits of GL(2, H)
zero = build_orbit(2, [1, 1])
principal = build_orbit(2, [2])

# Push every small input through the engine
images = {}
for a in range(6):
    for b in range(a + 1):
        images[lkt_map(zero, (a, b)).lkt] = f"zero {(a, b)}"
for t in range(12):
    images[lkt_map(principal, (t,)).lkt] = f"principal {t}"

# Print the dominant K-types with first entry at most 5 and their source
print("K-type    comes from")
for x in range(6):
    for y in range(x + 1):
        print(f"{str((x, y)):9} {images.get((x, y), '-')}")

# The closed forms agree with the engine
assert all(lkt_map(principal, (t,)).lkt == closed_form_lkt("gl2", 2, (t,)) for t in range(12))
print("\nprincipal orbit matches (ceil(t/2), ceil((t-1)/2))")
