"""Exception hierarchy.

Every error carries a short machine name (``name``) used by the CLI when it
serializes failures as ``{"error": name, "detail": ...}``.
"""


class FaceMonoidError(Exception):
    name = "FaceMonoidError"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail

    def to_json(self):
        return {"error": self.name, "detail": str(self.detail)}


class NotSquare(FaceMonoidError):
    name = "NotSquare"


class BadDiagonal(FaceMonoidError):
    name = "BadDiagonal"


class PositiveOffDiagonal(FaceMonoidError):
    name = "PositiveOffDiagonal"


class AsymmetricZero(FaceMonoidError):
    name = "AsymmetricZero"


class Decomposable(FaceMonoidError):
    name = "Decomposable"


class EmptySubset(FaceMonoidError):
    name = "EmptySubset"


class BadGenerator(FaceMonoidError):
    name = "BadGenerator"


class MixedAmbient(FaceMonoidError):
    name = "MixedAmbient"


class NotSpecial(FaceMonoidError):
    name = "NotSpecial"


class NotInSubgroup(FaceMonoidError):
    name = "NotInSubgroup"


class NotFiniteTypeJ(FaceMonoidError):
    name = "NotFiniteTypeJ"


class NotInCone(FaceMonoidError):
    name = "NotInCone"


class CannotSample(FaceMonoidError):
    name = "CannotSample"


class ParseError(FaceMonoidError):
    name = "ParseError"

    def __init__(self, detail="", position=None):
        super().__init__(detail)
        self.position = position

    def to_json(self):
        out = super().to_json()
        if self.position is not None:
            out["position"] = self.position
        return out
