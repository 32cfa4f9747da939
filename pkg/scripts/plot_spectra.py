import argparse

from matplotlib import pyplot as plt

from classes.scattered import make_L, rj4_mul_omega, spectrum
from config import SPECTRUM_PREFIX_LENGTH


def plot_spectra(indices=(-2, -1, 0, 1, 2, 3), length=SPECTRUM_PREFIX_LENGTH, output=None):
    """
    Expanded spectrum of each L_i next to the spectrum of L_(i-1)*w, one panel per index
    @param output: file to save the figure to; shown interactively when None
    @return: the matplotlib figure
    """
    cols = 2
    rows = (len(indices) + cols - 1) // cols
    fig, axs = plt.subplots(rows, cols, squeeze=False)
    row = 0
    col = 0
    for i in indices:
        direct = spectrum(make_L(i)).expand(length)
        lifted = spectrum(rj4_mul_omega(make_L(i - 1))).expand(length)
        axs[row, col].step(range(length), direct, label=f'L_{i}', where='post')
        axs[row, col].plot(range(length), lifted, linestyle='--', label=f'L_{i - 1}*w')
        axs[row, col].legend()
        axs[row, col].grid()
        axs[row, col].set_xlabel('Block counted from w^w')
        axs[row, col].set_ylabel('Cut type')
        axs[row, col].set_title(f'L_{i}')

        col = (col + 1) % cols
        if col == 0:
            row += 1
    fig.tight_layout()
    if output is None:
        plt.show()
    else:
        fig.savefig(output)
    return fig


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Plot spectra of the L-family')
    parser.add_argument('--indices', nargs='+', type=int, default=[-2, -1, 0, 1, 2, 3])
    parser.add_argument('--length', type=int, default=SPECTRUM_PREFIX_LENGTH)
    parser.add_argument('--output', help='Save the figure instead of showing it')
    args = parser.parse_args()
    plot_spectra(args.indices, args.length, args.output)
