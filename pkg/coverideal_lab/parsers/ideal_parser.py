import re
from typing import List, Optional

from pydantic import ValidationError

from . import ParseError, error_trace, read_json, read_lines, write_json
from coverideal_lab.models.monomial_model import MonomialIdeal

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class IdealParser:
    """Reads and writes monomial ideals as JSON or as one generator per line."""

    def __init__(self, path: str, ambient: Optional[int] = None):
        """
        Initialize the ideal parser.

        Args:
            path: Path to a `.json` file or a text file
            ambient: Ambient dimension for text input; inferred from the
                highest variable index when omitted
        """
        self.path = path
        self.ambient = ambient

    def load(self) -> MonomialIdeal:
        if self.path.endswith(".json"):
            return self.from_json(read_json(self.path))
        return self.from_text(read_lines(self.path))

    def from_json(self, document) -> MonomialIdeal:
        try:
            return MonomialIdeal(
                ambient=document["ambient"], generators=document.get("generators", [])
            )
        except (KeyError, TypeError, ValidationError) as e:
            error_trace(e)
            raise ParseError(self.path, f"bad ideal document: {e}") from e

    def from_text(self, lines: List[str]) -> MonomialIdeal:
        parsed = [self.parse_monomial(line) for line in lines]
        ambient = self.ambient
        if ambient is None:
            ambient = max((max(m, default=0) for m in parsed), default=0) or 1
        gens = []
        for factors in parsed:
            m = [0] * ambient
            for var, e in factors.items():
                if var > ambient:
                    raise ParseError(self.path, f"x{var} exceeds ambient {ambient}")
                m[var - 1] += e
            gens.append(m)
        try:
            return MonomialIdeal(ambient=ambient, generators=gens)
        except ValidationError as e:
            raise ParseError(self.path, str(e)) from e

    def parse_monomial(self, text: str):
        """Map 1-based variable index to exponent for `x1^2*x3`; `1` is the unit."""
        text = text.replace(" ", "")
        if text == "1":
            return {}
        factors = {}
        for part in text.split("*"):
            match = _FACTOR.match(part)
            if not match:
                raise ParseError(self.path, f"cannot read factor {part!r}")
            var = int(match.group(1))
            if var < 1:
                raise ParseError(self.path, f"variable index {var} below 1")
            factors[var] = factors.get(var, 0) + int(match.group(2) or 1)
        return factors

    @staticmethod
    def dump(ideal: MonomialIdeal, path: str) -> None:
        if path.endswith(".json"):
            write_json(path, ideal.to_json_dict())
            return
        with open(path, "w") as f:
            text = ideal.to_text()
            f.write(text + "\n" if text else "")
