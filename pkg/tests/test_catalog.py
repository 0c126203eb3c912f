from lgapery import catalog_entries, catalog_get, parse, symbol, involution
from lgapery.catalog import validate


class TestCatalog:
    def test_validates_at_startup(self):
        validate()

    def test_exactly_four_entries(self):
        assert len(catalog_entries()) == 4
        assert [e.name for e in catalog_entries()] == ["V12", "V16", "V18", "R1"]

    def test_lookup_is_case_insensitive(self):
        assert catalog_get("v18").name == "V18"
        assert catalog_get("nope") is None

    def test_v18_product_form(self):
        entry = catalog_get("V18")
        assert entry.phi == parse("(x+y+z)*(x+y+z+x*y+x*z+y*z+x*y*z)/(x*y*z)")

    def test_expected_symbols_match_discovered(self, catalog_operators):
        for entry in catalog_entries():
            assert symbol(catalog_operators[entry.name]) == entry.expected_symbol

    def test_expected_m_match_discovered(self, catalog_operators):
        for entry in catalog_entries():
            assert involution(catalog_operators[entry.name]).M == entry.expected_M

    def test_basis_tags(self):
        tags = {e.name: e.expected_basis for e in catalog_entries()}
        assert tags == {"V12": "zeta3", "V16": "zeta3",
                        "V18": "pi3_over_sqrt3", "R1": "zeta3"}
