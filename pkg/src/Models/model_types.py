from importlib import import_module

from Models.errors import UnsupportedSpec


class Types:
    # class name -> module under Models
    MODULES = {
        'PowerSeries': 'series',
        'ClassSpec': 'families',
        'MoebiusParams': 'families',
        'GridSpec': 'grid',
        'RadiusQuery': 'radius',
        'RadiusReport': 'verify',
    }

    # a JSON document's type is told by the first of these keys it carries
    SIGNATURES = [
        ('r_formula', 'RadiusReport'),
        ('coeffs', 'PowerSeries'),
        ('tag', 'ClassSpec'),
        ('theorem', 'RadiusQuery'),
        ('n_theta', 'GridSpec'),
    ]

    @staticmethod
    def detect(document):
        if not isinstance(document, dict):
            raise UnsupportedSpec(f"Expected a JSON object, got {type(document).__name__}")
        for key, type_str in Types.SIGNATURES:
            if key in document:
                return type_str
        raise UnsupportedSpec(f"Could not tell the type of a document with keys {sorted(document)}")

    @staticmethod
    def load(document):
        """Build the value a JSON document describes."""
        return Types(Types.detect(document)).get_type().from_dict(document)

    def __init__(self, type_str='') -> None:
        self.type_str = type_str
        self.module_name = 'Models'

    def get_type(self):

        if not self.type_str:
            raise UnsupportedSpec("Type string not provided")

        if self.type_str not in Types.MODULES:
            raise UnsupportedSpec(f"Unknown type {self.type_str}")

        try:
            module = import_module(f".{Types.MODULES[self.type_str]}", package=self.module_name)
            return getattr(module, self.type_str)
        except (ImportError, AttributeError) as e:
            raise ImportError(f"Could not load type {self.type_str}: {str(e)}")


if __name__ == "__main__":
    spec = Types.load({"tag": "JanowskiStarlike", "A": [2, 0], "B": [-1, 0]})
    print(spec)
    print(Types('GridSpec').get_type()())
