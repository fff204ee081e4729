import sys
from unittest import TestLoader, TextTestRunner

if __name__ == '__main__':
    pattern = sys.argv[1] if len(sys.argv) > 1 else 'test_*.py'
    test_suite = TestLoader().discover('tests', pattern=pattern, top_level_dir='.')

    runner = TextTestRunner(verbosity=2)
    result = runner.run(test_suite)
    sys.exit(0 if result.wasSuccessful() else 1)
