"""Boolean-or-inconclusive outcomes carrying machine-checkable certificates.

Certificates are plain JSON-compatible structures (dicts, lists, strings,
ints) so reports can embed them verbatim and validators can re-check them
without touching internal objects.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    value: bool | None  # None = inconclusive (capacity bailout)
    route: str
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "route": self.route,
            "certificate": self.certificate,
        }
