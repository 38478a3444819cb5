from ._pdd import (
    KElement,
    check_pdd2,
    pdd3_forward,
    pdd3_elements,
    pdd3_moves,
    pdd3_classes,
    is_hat_shaped,
    check_pdd3,
    check_pdd3_dual,
)

from ._pda import (
    LocalMonoWitness,
    PdaCell,
    PdaPath,
    PDA_PATHS,
    lower_coend,
    upper_coend,
    check_pda_local_monos,
)
