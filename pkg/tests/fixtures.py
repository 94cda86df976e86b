"""Shared fixture matrix: expression -> expected structural labels."""

# (expr, regime, depth, degree, k, r)
CLASSIFY_MATRIX = [
    ("kset(4)", "finite", 0, None, None, None),
    ("union(edge,path3)", "finite", 0, None, None, None),
    ("mset_inf(point)", "polynomial", 1, 0, None, None),
    ("mset_inf(edge)", "polynomial", 1, 1, None, None),
    ("union(set,set,set)", "polynomial", 1, 2, None, None),
    ("mset_inf(path3)", "polynomial", 1, 4, None, None),
    ("mset(2,mset_inf(edge))", "polynomial", 1, 3, None, None),
    ("union(kset(2),mset_inf(edge))", "polynomial", 1, 1, None, None),
    ("mset_inf(set)", "stretched_exponential", 2, None, 2, None),
    ("mset_inf(mset_inf(edge))", "stretched_exponential", 2, None, 3, None),
    ("union(mset_inf(set),set)", "stretched_exponential", 2, None, 2, None),
    ("mset_inf(mset_inf(path3))", "stretched_exponential", 2, None, 6, None),
    ("mset(3,mset_inf(set))", "stretched_exponential", 2, None, 2, None),
    ("mset_inf(mset_inf(set))", "log_iterated", 3, None, 1, 1),
    ("mset_inf(mset_inf(mset_inf(edge)))", "log_iterated", 3, None, 2, 1),
    ("mset_inf(mset_inf(mset_inf(set)))", "log_iterated", 4, None, 1, 2),
    ("seq_dlo(kset(2))", "exponential", None, None, None, None),
    ("seq_dlo(kset(3))", "exponential", None, None, None, None),
    ("seq_dlo(path3)", "exponential", None, None, None, None),
    ("union(mset_inf(set),seq_dlo(kset(2)))", "exponential", None, None, None, None),
]

# every constructor appears at least once
AGREEMENT_FIXTURES = [
    "path3",
    "mset_inf(set)",
    "union(set,set,set)",
    "mset_inf(edge)",
    "mset(2,edge)",
    "mset_inf(path3)",
    "seq_dlo(kset(2))",
    "mset_inf(seq_dlo(kset(2)))",
    "union(mset(3,set),seq_dlo(path3))",
    "mset_inf(mset_inf(set))",
]

BOUNDS_FIXTURES = [
    "mset(2,set)",
    "mset(3,set)",
    "mset(3,edge)",
    "union(set,set)",
    "union(set,set,path3,set)",
    "mset(3,mset_inf(edge))",
    "mset(2,mset_inf(set))",
    "union(path3,path3)",
    "mset_inf(path3)",
    "mset_inf(mset_inf(mset_inf(set)))",
    "union(mset_inf(set),seq_dlo(kset(2)),kset(2))",
    "union(mset_inf(edge),mset_inf(edge),mset_inf(edge))",
]
