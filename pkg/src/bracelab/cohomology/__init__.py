"""Second cohomology in three flavors and the maps comparing them.

Submodules: ``skew_brace`` (brace extensions by trivial abelian braces),
``rota_baxter`` (operator extensions), ``relative`` (relative operator
extensions), and ``maps`` (the induced maps between the theories and the
commuting-diagram check).
"""
