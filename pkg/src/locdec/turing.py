"""Deterministic single-tape Turing machines for the ITER languages.

State 0 is the start state, 1 accepts and 2 rejects; symbol 0 is the
blank.  The tape is semi-infinite: a left move at cell 0 stays at cell 0.
Once a machine halts its configuration is frozen, so the configuration
"after d steps" is defined for every d.

Text format, one directive or transition per line (``#`` starts a comment)::

    name    even_parity
    symbols _ 0 1            # first symbol is the blank
    start   even
    accept  acc
    reject  rej
    even 0 -> even 0 R       # state symbol -> state symbol move
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlreadyHalted, MalformedEncoding

START, ACCEPT, REJECT = 0, 1, 2
L, R = 0, 1

STATE_BITS = 16
SYMBOL_BITS = 8
HEAD_BITS = 16
TAPE_LEN_BITS = 16
INPUT_LEN_BITS = 16

_DEFAULT_SYMBOLS = "_01" + "23456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class TMSpec:
    """``delta[(state, symbol)] = (state, symbol, move)`` on non-halting states."""

    n_states: int
    n_symbols: int
    delta: tuple
    state_names: tuple[str, ...] = field(default=(), compare=False)
    symbols: tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default="tm", compare=False)

    def __post_init__(self):
        if self.n_states < 3:
            raise ValueError("a machine needs start, accept and reject states")
        if not 1 <= self.n_symbols < 1 << SYMBOL_BITS:
            raise ValueError("alphabet size must fit in 8 bits")
        table = dict(self.delta)
        for s in range(self.n_states):
            if s in (ACCEPT, REJECT):
                continue
            for a in range(self.n_symbols):
                if (s, a) not in table:
                    raise ValueError(f"transition missing for state {s}, symbol {a}")
                ns, b, m = table[(s, a)]
                if not (0 <= ns < self.n_states and 0 <= b < self.n_symbols and m in (L, R)):
                    raise ValueError(f"bad transition {(s, a)} -> {(ns, b, m)}")
        object.__setattr__(self, "delta", tuple(sorted(table.items())))
        if not self.state_names:
            object.__setattr__(self, "state_names", tuple(f"q{i}" for i in range(self.n_states)))
        if not self.symbols:
            object.__setattr__(self, "symbols", tuple(_DEFAULT_SYMBOLS[:self.n_symbols]))
        object.__setattr__(self, "_table", table)

    def move(self, state: int, symbol: int):
        return self._table[(state, symbol)]

    def tape_of(self, word: str) -> tuple[int, ...]:
        try:
            return tuple(self.symbols.index(ch) for ch in word)
        except ValueError:
            raise ValueError(f"input {word!r} uses symbols outside {self.symbols}") from None

    def word_of(self, tape) -> str:
        return "".join(self.symbols[a] for a in tape)


@dataclass(frozen=True)
class TMConfig:
    state: int
    head: int
    tape: tuple[int, ...]

    @property
    def halted(self) -> bool:
        return self.state in (ACCEPT, REJECT)

    @property
    def accepting(self) -> bool:
        return self.state == ACCEPT

    @property
    def rejecting(self) -> bool:
        return self.state == REJECT


def start_config(tm: TMSpec, word: str) -> TMConfig:
    return TMConfig(START, 0, tm.tape_of(word))


def tm_step(tm: TMSpec, conf: TMConfig) -> TMConfig:
    if conf.halted:
        raise AlreadyHalted("cannot step a halted configuration")
    tape = list(conf.tape)
    if conf.head == len(tape):
        tape.append(0)
    ns, b, m = tm.move(conf.state, tape[conf.head])
    tape[conf.head] = b
    head = conf.head + 1 if m == R else max(0, conf.head - 1)
    return TMConfig(ns, head, tuple(tape))


def tm_config_after(tm: TMSpec, word: str, d: int) -> TMConfig:
    """Configuration after ``d`` steps; frozen once the machine halts."""
    if d < 0:
        raise ValueError("step count must be nonnegative")
    conf = start_config(tm, word)
    for _ in range(d):
        if conf.halted:
            break
        conf = tm_step(tm, conf)
    return conf


def tm_next(tm: TMSpec, conf: TMConfig) -> TMConfig:
    """One step, or the same configuration if already halted."""
    return conf if conf.halted else tm_step(tm, conf)


def tm_halt_time(tm: TMSpec, word: str, cap: int) -> int | None:
    conf = start_config(tm, word)
    for d in range(cap + 1):
        if conf.halted:
            return d
        if d < cap:
            conf = tm_step(tm, conf)
    return None


# ------------------------------------------------------------------ encoding


def _fixed(x: int, width: int) -> str:
    if not 0 <= x < 1 << width:
        raise ValueError(f"{x} does not fit in {width} bits")
    return format(x, f"0{width}b")


class _Reader:
    def __init__(self, bits: str, pos: int = 0):
        self.bits, self.pos = bits, pos

    def take(self, width: int) -> int:
        if self.pos + width > len(self.bits):
            raise MalformedEncoding("encoding ends early")
        chunk = self.bits[self.pos:self.pos + width]
        self.pos += width
        return int(chunk, 2) if width else 0

    def done(self):
        if self.pos != len(self.bits):
            raise MalformedEncoding(f"{len(self.bits) - self.pos} trailing bits")


def encode_tm(tm: TMSpec) -> str:
    """16-bit state count, 8-bit alphabet size, then one row per
    (non-halting state, symbol): 16-bit state, 8-bit symbol, 1-bit move."""
    out = [_fixed(tm.n_states, STATE_BITS), _fixed(tm.n_symbols, SYMBOL_BITS)]
    for s in range(tm.n_states):
        if s in (ACCEPT, REJECT):
            continue
        for a in range(tm.n_symbols):
            ns, b, m = tm.move(s, a)
            out += [_fixed(ns, STATE_BITS), _fixed(b, SYMBOL_BITS), str(m)]
    return "".join(out)


def _read_tm(r: _Reader) -> TMSpec:
    n_states = r.take(STATE_BITS)
    n_symbols = r.take(SYMBOL_BITS)
    if n_states < 3 or n_symbols < 1:
        raise MalformedEncoding("machine header out of range")
    delta = {}
    for s in range(n_states):
        if s in (ACCEPT, REJECT):
            continue
        for a in range(n_symbols):
            ns, b, m = r.take(STATE_BITS), r.take(SYMBOL_BITS), r.take(1)
            if ns >= n_states or b >= n_symbols:
                raise MalformedEncoding("transition out of range")
            delta[(s, a)] = (ns, b, m)
    return TMSpec(n_states, n_symbols, tuple(delta.items()))


def decode_tm(bits: str) -> TMSpec:
    r = _Reader(bits)
    tm = _read_tm(r)
    r.done()
    return tm


def encode_config(conf: TMConfig) -> str:
    """16-bit state, 16-bit head, 16-bit tape length, 8 bits per cell."""
    out = [_fixed(conf.state, STATE_BITS), _fixed(conf.head, HEAD_BITS),
           _fixed(len(conf.tape), TAPE_LEN_BITS)]
    out += [_fixed(a, SYMBOL_BITS) for a in conf.tape]
    return "".join(out)


def _read_config(r: _Reader, tm: TMSpec) -> TMConfig:
    state, head, k = r.take(STATE_BITS), r.take(HEAD_BITS), r.take(TAPE_LEN_BITS)
    tape = tuple(r.take(SYMBOL_BITS) for _ in range(k))
    if state >= tm.n_states or head > k or any(a >= tm.n_symbols for a in tape):
        raise MalformedEncoding("configuration out of range")
    return TMConfig(state, head, tape)


def decode_config(bits: str, tm: TMSpec) -> TMConfig:
    r = _Reader(bits)
    conf = _read_config(r, tm)
    r.done()
    return conf


def encode_input(tm: TMSpec, word: str) -> str:
    tape = tm.tape_of(word)
    return _fixed(len(tape), INPUT_LEN_BITS) + "".join(_fixed(a, SYMBOL_BITS) for a in tape)


def _read_input(r: _Reader, tm: TMSpec) -> str:
    k = r.take(INPUT_LEN_BITS)
    tape = [r.take(SYMBOL_BITS) for _ in range(k)]
    if any(a >= tm.n_symbols for a in tape):
        raise MalformedEncoding("input symbol out of range")
    return tm.word_of(tape)


def encode_pivot(tm: TMSpec, a: str, b: str) -> str:
    return encode_tm(tm) + encode_input(tm, a) + encode_input(tm, b)


def decode_pivot(bits: str) -> tuple[TMSpec, str, str]:
    r = _Reader(bits)
    tm = _read_tm(r)
    a, b = _read_input(r, tm), _read_input(r, tm)
    r.done()
    return tm, a, b


def encode_arm(tm: TMSpec, conf: TMConfig) -> str:
    return encode_tm(tm) + encode_config(conf)


def decode_arm(bits: str) -> tuple[TMSpec, TMConfig]:
    r = _Reader(bits)
    tm = _read_tm(r)
    conf = _read_config(r, tm)
    r.done()
    return tm, conf


# --------------------------------------------------------------- text format


def parse_tm(text: str) -> TMSpec:
    directives: dict[str, list[str]] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] in ("name", "symbols", "start", "accept", "reject", "states"):
            directives[line[0]] = line[1:]
        elif len(line) == 6 and line[2] == "->":
            rows.append((lineno, line))
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}")
    try:
        symbols = directives["symbols"]
        start, acc, rej = (directives[k][0] for k in ("start", "accept", "reject"))
    except (KeyError, IndexError):
        raise ValueError("machine needs symbols, start, accept and reject lines") from None
    if len({start, acc, rej}) != 3:
        raise ValueError("start, accept and reject must be distinct states")
    states = [start, acc, rej]
    for name in directives.get("states", []) + [w for _, row in rows for w in (row[0], row[3])]:
        if name not in states:
            states.append(name)
    delta = {}
    for lineno, (s, a, _, ns, b, m) in rows:
        if m not in ("L", "R"):
            raise ValueError(f"line {lineno}: move must be L or R")
        try:
            key = (states.index(s), symbols.index(a))
            val = (states.index(ns), symbols.index(b), R if m == "R" else L)
        except ValueError:
            raise ValueError(f"line {lineno}: unknown symbol") from None
        if key in delta:
            raise ValueError(f"line {lineno}: duplicate transition")
        delta[key] = val
    name = directives.get("name", ["tm"])[0]
    return TMSpec(len(states), len(symbols), tuple(delta.items()), tuple(states),
                  tuple(symbols), name)


def format_tm(tm: TMSpec) -> str:
    st, sy = tm.state_names, tm.symbols
    lines = [f"name {tm.name}", "symbols " + " ".join(sy),
             f"start {st[START]}", f"accept {st[ACCEPT]}", f"reject {st[REJECT]}"]
    for (s, a), (ns, b, m) in tm.delta:
        lines.append(f"{st[s]} {sy[a]} -> {st[ns]} {sy[b]} {'R' if m == R else 'L'}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- bundled zoo

EVEN_PARITY = parse_tm("""
name even_parity
symbols _ 0 1
start even
accept acc
reject rej
even 0 -> even 0 R
even 1 -> odd 1 R
even _ -> acc _ R
odd 0 -> odd 0 R
odd 1 -> even 1 R
odd _ -> rej _ R
""")

FIRST_SYMBOL_ONE = parse_tm("""
name first_symbol_one
symbols _ 0 1
start s
accept acc
reject rej
s 1 -> acc 1 R
s 0 -> rej 0 R
s _ -> rej _ R
""")

# walks to the end and back one cell, so it exercises left moves
LAST_EQUALS_FIRST = parse_tm("""
name last_equals_first
symbols _ 0 1
start s
accept acc
reject rej
s _ -> acc _ R
s 0 -> saw0 0 R
s 1 -> saw1 1 R
saw0 0 -> saw0 0 R
saw0 1 -> saw0 1 R
saw0 _ -> end0 _ L
saw1 0 -> saw1 0 R
saw1 1 -> saw1 1 R
saw1 _ -> end1 _ L
end0 0 -> acc 0 R
end0 1 -> rej 1 R
end0 _ -> rej _ R
end1 1 -> acc 1 R
end1 0 -> rej 0 R
end1 _ -> rej _ R
""")

LOOPER = parse_tm("""
name looper
symbols _ 0 1
start s
accept acc
reject rej
s _ -> s _ R
s 0 -> s 0 R
s 1 -> s 1 R
""")

BUNDLED = {tm.name: tm for tm in (EVEN_PARITY, FIRST_SYMBOL_ONE, LAST_EQUALS_FIRST)}
