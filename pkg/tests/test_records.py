from hypothesis import given
from hypothesis import strategies as st

import pytest

from eulerslopes.errors import ParseError
from eulerslopes.records import format_csv, format_record, parse_csv, parse_record

keys = st.text(alphabet="abcdefghijklmnopqrstuvwxyz_", min_size=1, max_size=8)
values = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")), max_size=20)


@given(st.dictionaries(keys, values, max_size=6))
def test_record_round_trip(d):
    assert parse_record(format_record(d)) == d


def test_record_examples():
    assert format_record({"slope": "5/2", "member": "true"}) == "slope=5/2 member=true"
    assert parse_record("message='two words'") == {"message": "two words"}
    with pytest.raises(ParseError):
        parse_record("novalue")
    with pytest.raises(ParseError):
        parse_record("a=1 a=2")
    with pytest.raises(ValueError):
        format_record({"bad key": 1})


def test_csv_round_trip():
    rows = [{"set": "M:g=1,n=1", "slope": "4/3"}, {"set": "Z", "slope": "2/1", "extra": "x"}]
    back = parse_csv(format_csv(rows))
    assert back[0] == {"set": "M:g=1,n=1", "slope": "4/3", "extra": ""}
    assert back[1] == rows[1]
