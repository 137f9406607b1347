"""Citation metadata for certificates.

Two tables: AXIOMS names every background fact the pipeline consumes without
re-deriving it (each carries the standard result it rests on), and
IDENTITIES names every identity the engine verifies symbolically (each
carries the formula being certified).  Certificates embed these records so a
reader can audit which steps are derivations and which are imports.
"""

AXIOMS = {
    "kobayashi-ochiai": {
        "statement": "A Fano n-fold has index at most n+1.",
        "citation": "Kobayashi-Ochiai bound on the Fano index",
    },
    "fano-surface-p2": {
        "statement": "A Fano surface of Picard number one is the projective "
        "plane, so its index is 3.",
        "citation": "classification of del Pezzo surfaces",
    },
    "nef-equals-pseff-threshold": {
        "statement": "The nef threshold of -K_pi against H equals the "
        "pseudoeffective threshold for these bundles; upsilon is stored as "
        "tau by fiat.",
        "citation": "positivity-cone comparison for P1-bundles admitting a "
        "second fibration",
    },
    "case-221-riemann-roch": {
        "statement": "On the (2,2,1) candidate with c1 = -1, c2 is even.",
        "citation": "Riemann-Roch on a del Pezzo threefold",
    },
    "case-221-degree-bound": {
        "statement": "A del Pezzo threefold of Picard number one has degree "
        "at most 5.",
        "citation": "Iskovskikh's classification of Fano threefolds",
    },
    "case-221-adjunction": {
        "statement": "The unique arithmetic candidate (d, c2) = (4, 2) for "
        "(2,2,1) with c1 = -1 is excluded: the induced plane inside the "
        "intersection of two quadrics would violate adjunction; hence c1 = 0.",
        "citation": "adjunction formula via Stein factorization of the "
        "ruled-surface image",
    },
    "unimodular-base-change": {
        "statement": "{H, L} and {H', L'} are both integral bases of the "
        "Picard lattice of Z, so the base change has determinant +1 or -1.",
        "citation": "Picard lattice of a P1-bundle over a Picard-number-one "
        "base",
    },
    "sigma-normalization": {
        "statement": "The codimension-2 generator Sigma is chosen per case "
        "so that d = 1: a point on the plane, a line in projective 3-space, "
        "the positive generator for the 5-quadric.",
        "citation": "generators of the codimension-2 numerical group in the "
        "homogeneous cases",
    },
    "chern-class-uniqueness": {
        "statement": "The matched bundles are determined by their Chern "
        "classes among stable rank-2 bundles.",
        "citation": "uniqueness of null-correlation and Cayley bundles",
    },
    "tan-square-monotone": {
        "statement": "tan^2 is strictly increasing on (0, pi/2), so the "
        "smallest positive root of Q_m is tan^2(pi/m).",
        "citation": "monotonicity of the tangent on the principal interval",
    },
    "numerical-codim2-rank-one": {
        "statement": "The codimension-2 numerical group of the base with "
        "rational coefficients is one-dimensional; it is generated by Sigma.",
        "citation": "rational-connectedness argument for bases of bi-fibered "
        "P1-bundles",
    },
}

IDENTITIES = {
    "chern-wu": {
        "description": "defining relation of the projectivization",
        "formula": "L^2 - c1*H*L + c2*H^2 = 0",
    },
    "kpi-fiber-degree": {
        "description": "relative canonical degree on a fiber",
        "formula": "K_pi . f = -2",
    },
    "kpi-square": {
        "description": "square of the relative canonical",
        "formula": "K_pi^2 = (c1^2 - 4*c2) * H^2",
    },
    "nef-vanishing-polynomial": {
        "description": "vanishing of the top self-intersection of the nef "
        "boundary class, reduced to (tau, Delta)",
        "formula": "sum over odd i of C(n+1,i) tau^(n+1-i) Delta^((i-1)/2) = 0",
    },
    "nef-vanishing-bruteforce": {
        "description": "same class expanded by iterated ring multiplication "
        "(independent route, no binomial shortcut)",
        "formula": "(-K_pi + tau*H)^(n+1) = 0",
    },
    "imaginary-form": {
        "description": "complex pairing form of the vanishing polynomial",
        "formula": "(tau + sqrt(Delta))^(n+1) - (tau - sqrt(Delta))^(n+1) = 0",
    },
    "total-chern-product": {
        "description": "total Chern class of the pulled-back bundle from the "
        "two line-bundle factors",
        "formula": "c(pi*E) = 1 + ((a+b)/mu) H + (ab/mu^2) H^2 "
        "+ ((a-b)/(mu*mup)) H*H' - (1/mup^2) H'^2",
    },
    "ruled-surface-relation": {
        "description": "self-intersection relation on the ruled surface over "
        "a fiber",
        "formula": "(zeta*H)^2 = (mu*e/mup) zeta*H . zeta*H'",
    },
    "vanishing-coefficient": {
        "description": "coefficient solving the numerical vanishing of the "
        "mixed codimension-2 part",
        "formula": "g = (b - a)/(mu^2 * e)",
    },
    "chern-class-reduced": {
        "description": "total Chern class reduced to powers of H only",
        "formula": "c(pi*E) = 1 + ((a+b)/mu) H + (ab/mu^2 + (a-b)/(e*mu^2)) H^2",
    },
    "discriminant-dual": {
        "description": "second, Chern-class route to the discriminant",
        "formula": "Delta = tau^2 - 4*tau/(e*mu)",
    },
    "splitting-type": {
        "description": "splitting type on a fiber of the second fibration",
        "formula": "(a, b) = (-1 + (c1+iX)*mu/2, 1 + (c1-iX)*mu/2)",
    },
    "base-change-rows": {
        "description": "second-fibration divisor classes in the first basis",
        "formula": "H' = -(mup/2)(c1-tau) H + mup L;  "
        "L' = (-(mup/4)(c1-tau)(c1p-taup) + 1/mu) H + (mup/2)(c1p-taup) L",
    },
    "base-change-determinant": {
        "description": "determinant of the base change",
        "formula": "det = -mup/mu",
    },
    "dual-discriminant-agreement": {
        "description": "the two discriminant routes agree on every emitted "
        "tuple",
        "formula": "-tau^2 tan^2(pi/(n+1)) = tau^2 - 4*tau/(e*mu)",
    },
    "bezout-witness": {
        "description": "line-bundle witness with fiber degree one",
        "formula": "alpha*mu + beta*(L.f') = 1",
    },
    "degree-ratio": {
        "description": "degree ratio of the two bases",
        "formula": "d_Y/d_X = (tau*mu)^(n-1) / kappa(n)^((n-1)/2)",
    },
}
