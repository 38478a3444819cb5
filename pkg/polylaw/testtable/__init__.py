from ._testtable import (
    terminal_polytable,
    free_one_generator,
    free_two_generators,
    corpus,
    mutate_composition,
    mutate_polycomposite,
)
