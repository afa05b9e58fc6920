from linkbench.tests.run import configure_for_tests


def pytest_configure(config):
    configure_for_tests()
