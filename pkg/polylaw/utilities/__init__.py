from ._union_find import UnionFind

from ._permutations import (
    identity_permutation,
    is_permutation,
    compose_permutations,
    invert_permutation,
    permute,
    all_permutations,
    adjacent_transposition,
    transposition_word,
    arrangements,
    permutation_sum,
)

from ._progress import progressbar, parallel_map
