from .cli import CheckFailed, InvalidInput, output_options, validating
from .rational import format_fraction, fraction_record, parse_fraction
from .report import Report, fraction_text, write_report
