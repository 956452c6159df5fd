from services.cohomology import line_bundle_cohomology, h0, is_ulrich_line_bundle  # noqa
from services.presentation import validate_config, build_presentation, sample_phi  # noqa
from services.verifier import verify_ulrich, verify_config, search_line_bundles  # noqa
