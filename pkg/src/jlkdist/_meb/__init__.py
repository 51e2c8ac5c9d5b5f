from jlkdist._meb._dual import radius_from_support
from jlkdist._meb._exact import weighted_meb_batch, weighted_meb_exact
from jlkdist._meb._frank_wolfe import weighted_meb
from jlkdist._meb._result import MebResult
