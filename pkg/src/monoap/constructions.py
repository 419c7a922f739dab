"""Built-in block colorings, star templates and the recursive ``template ⋉ inner`` construction."""

from __future__ import annotations

from dataclasses import dataclass

from .apcount import APFilter, count_mono_cyclic
from .core import Coloring, parse_coloring

_BUILTIN_COLORINGS = {
    "B20": "11101101110001001000",
    "B22": "1110110100011101001000",
    "B74": "1111011100001011001010100110100001110"
           "1111011100001011001000100110100001110",
}

_BUILTIN_TEMPLATES = {
    "B11": "11101*01000",
    "B37": "11110111000010110010*0100110100001110",
}

# progression length each template is free of (non-degenerate) monochromatic APs for
TEMPLATE_K = {"B11": 4, "B37": 5}


def builtin_coloring(name: str) -> Coloring:
    try:
        return parse_coloring(_BUILTIN_COLORINGS[name.upper()])
    except KeyError:
        raise ValueError(f"unknown built-in coloring {name!r}") from None


@dataclass(frozen=True)
class BlockTemplate:
    """A block over ``{0, 1, *}``; stars are filled from an inner coloring."""

    slots: tuple

    def __post_init__(self):
        slots = tuple(s if s == "*" else int(s) for s in self.slots)
        if any(s not in (0, 1, "*") for s in slots):
            raise ValueError("template slots must be 0, 1 or '*'")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def parse(cls, text: str) -> "BlockTemplate":
        body = "".join(ch for ch in text if ch in "01*")
        return cls(tuple(body))

    @property
    def b(self) -> int:
        return len(self.slots)

    @property
    def star_positions(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.slots) if s == "*")

    def fill(self, value: int) -> Coloring:
        return Coloring(tuple(value if s == "*" else s for s in self.slots))

    def __str__(self) -> str:
        return "".join(str(s) for s in self.slots)


def builtin_template(name: str) -> BlockTemplate:
    try:
        return BlockTemplate.parse(_BUILTIN_TEMPLATES[name.upper()])
    except KeyError:
        raise ValueError(f"unknown built-in template {name!r}") from None


def resolve_block(spec: str) -> Coloring:
    """Resolve a block description to a coloring of ``Z_b``.

    Accepts a built-in coloring name, a literal bit string, a template name
    (its star filled red), or a chain ``T1xT2x...xC`` meaning
    ``T1 ⋉ (T2 ⋉ (... ⋉ C))`` with templates given by name or as strings
    over ``0``, ``1``, ``*``.
    """
    parts = spec.strip().split("x")
    if len(parts) > 1:
        c = resolve_block(parts[-1])
        for part in reversed(parts[:-1]):
            c = ltimes(_resolve_template(part), c)
        return c
    key = spec.strip().upper()
    if key in _BUILTIN_COLORINGS:
        return builtin_coloring(key)
    if key in _BUILTIN_TEMPLATES:
        return builtin_template(key).fill(0)
    return parse_coloring(spec)


def _resolve_template(spec: str) -> BlockTemplate:
    key = spec.strip().upper()
    if key in _BUILTIN_TEMPLATES:
        return builtin_template(key)
    if "*" not in spec:
        raise ValueError(f"{spec!r} is not a template")
    return BlockTemplate.parse(spec)


def ltimes(template: BlockTemplate, inner: Coloring) -> Coloring:
    """``t`` copies of ``template``; the star of copy ``j`` takes ``inner[j]``."""
    if len(template.star_positions) != 1:
        raise ValueError("template must contain exactly one star")
    bits: list[int] = []
    for value in inner.bits:
        bits.extend(template.fill(value).bits)
    return Coloring(tuple(bits))


def check_template_star_property(template: BlockTemplate, k: int) -> bool:
    """Both star fills are free of non-degenerate monochromatic k-APs."""
    if len(template.star_positions) != 1:
        raise ValueError("template must contain exactly one star")
    return all(count_mono_cyclic(template.fill(v), k, APFilter.NONDEGENERATE) == 0
               for v in (0, 1))


@dataclass(frozen=True)
class TowerSpec:
    template: BlockTemplate
    depth: int
    base: Coloring

    @property
    def modulus(self) -> int:
        return self.template.b ** self.depth * self.base.n


def tower_coloring(spec: TowerSpec, k: int | None = None) -> Coloring:
    """``template ⋉ (template ⋉ (... ⋉ base))`` with ``depth`` levels."""
    if spec.depth < 1:
        raise ValueError("depth must be at least 1")
    if k is not None and not check_template_star_property(spec.template, k):
        raise ValueError(f"template is not free of non-degenerate monochromatic {k}-APs")
    c = spec.base
    for _ in range(spec.depth):
        c = ltimes(spec.template, c)
    return c


def tower_predicted_count(spec: TowerSpec, k: int) -> int:
    """Apply ``count(b t) = (b - 1) t^2 + count(t)`` once per level.

    Valid whenever the template has the star property for ``k``: a k-AP of
    ``template ⋉ C`` is monochromatic only if ``b | d``; the ``b - 1``
    non-star residues of ``a`` contribute ``t^2`` each and the star residue
    reproduces the APs of ``C``.
    """
    if not check_template_star_property(spec.template, k):
        raise ValueError(f"template is not free of non-degenerate monochromatic {k}-APs")
    b = spec.template.b
    t = spec.base.n
    count = count_mono_cyclic(spec.base, k)
    for _ in range(spec.depth):
        count = (b - 1) * t * t + count
        t *= b
    return count
