import sys
from datetime import datetime

from dyer.lib.configurator import Configurator
from dyer.lib.group_analyzer import GroupAnalyzer


def main(args=None):
    configurator = Configurator(sys.argv[1:] if args is None else args)
    analyzer = GroupAnalyzer.build(configurator)
    time = datetime.now()
    analyzer.analyze()
    if configurator.get_verbose():
        print("Working time: ", datetime.now() - time, file=sys.stderr)


if __name__ == '__main__':
    main()
