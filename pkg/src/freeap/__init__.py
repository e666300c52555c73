"""Free applicative functors, with an option-parser and a web-service DSL built on them."""
from freeap.core import (
    CONCAT,
    IDENTITY,
    OPTIONAL,
    RUN_FORM,
    SUM,
    ApplicativeDict,
    Const,
    Identity,
    RunForm,
    Table,
    TestCommand,
    const_applicative,
    interpret_command,
    run_form_eq,
)
from freeap.free import (
    FREE_APPLICATIVE,
    Ap,
    FreeA,
    Pure,
    ap_fa,
    count,
    lift2,
    lift3,
    map_fa,
    one,
    pure_fa,
    size,
)
from freeap.left import ApL, FreeAL, PureL, l2r, map_fal, r2l
from freeap.monad import FreeM, Return, Step, bind, lift_a2m, lift_effect, map_fm, return_fm
from freeap.transform import lift_t, lower, raise_

__all__ = [name for name in dir() if not name.startswith("_")]
