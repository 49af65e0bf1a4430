from lktmap import build_orbit

# Orbit data for a few partitions, read from the sl(2)-triple model
for n, part in [(2, [2]), (3, [2, 1]), (3, [3]), (4, [3, 1]), (4, [4]), (5, [4, 1])]:
    o = build_orbit(n, part)
    print(f"n={n} partition={part}")
    print(f"  H eigenvalues   {o.h_weights}")
    print(f"  L cap K         {o.levi_shape}")
    print(f"  stabilizer      {o.stab_str()}")
    print(f"  rho(u) on T     {o.rho_u_T}")
    print(f"  s_1 weights     {list(o.s1_weights) or 'none (even orbit)'}")
