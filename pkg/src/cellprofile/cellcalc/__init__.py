"""Cell-tree calculus: data model, parser, exact profiles, regime classifier, bound checks."""
