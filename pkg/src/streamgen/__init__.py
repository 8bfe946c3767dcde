"""streamgen: lazy stream sources, a combinator algebra over finite and
infinite streams, resumable-producer engines, a small generator
expression language, and memoized lazy lists with an operation-transport
isomorphism between the two representations."""

from .combinators import (
    cantor_pair,
    cantor_unpair,
    convolution,
    map1,
    map2,
    product,
    product_cantor,
    reduce_stream,
    scan,
    setify,
    sum_streams,
)
from .core import (
    Source,
    constant,
    cycle_values,
    drop,
    from_list,
    int_range,
    iterate,
    naturals,
    negatives,
    positives,
    random_stream,
    show,
    slice_,
    take,
    unfold,
)
from .engines import (
    Engine,
    and_nats,
    answer_source,
    clonable_source,
    clone_source,
    engine_create,
    engine_next,
    engine_stop,
    or_nats,
)
from .io_streams import line_reader, token_reader
from .lang import (
    Embed,
    Env,
    LexError,
    ParseError,
    default_env,
    eval_expr,
    eval_text,
    parse_text,
    tokenize,
)
from .lazylist import (
    LazyList,
    gen2lazy,
    lazy2gen,
    lazy_list,
    lazy_maplist,
    lazy_nats,
    lazy_nats_from,
    lazy_sum,
    lazy_take,
    sum_alt,
    transport1,
    transport2,
    transport_split,
)
from .values import Pair, is_symbol, render, same_value, value_key

__version__ = "0.1.0"
